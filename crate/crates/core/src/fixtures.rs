//! Small characteristic pairs used throughout tests, the CLI and the
//! Python bindings.

use crate::complexes::{CharacteristicPair, Face, Fan, Mode};
use crate::exact::scalar::ivec;

fn fan(dim: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    let rays = rays.iter().map(|r| ivec(r)).collect();
    let cones = cones.iter().map(|c| c.iter().map(|v| v - 1).collect::<Face>()).collect();
    Fan::new(dim, rays, cones).expect("fixture data is well formed")
}

fn from_fan(f: Fan) -> CharacteristicPair {
    CharacteristicPair::from_fan(f, None, Mode::Integer).expect("fixture fan is complete and unimodular")
}

/// Rays `±1` on the line.
pub fn segment_fan() -> Fan {
    fan(1, &[&[1], &[-1]], &[&[1], &[2]])
}

/// Rays `(1,0), (0,1), (-1,-1)`.
pub fn projective_plane_fan() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, -1]], &[&[1, 2], &[2, 3], &[1, 3]])
}

/// The four coordinate quadrants.
pub fn quadrant_fan() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
}

/// Rays `(1,0), (0,1), (-1,1), (0,-1)`.
pub fn hirzebruch_fan() -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]], &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
}

/// The eight coordinate orthants of `R^3`.
pub fn octahedral_fan() -> Fan {
    let mut cones = Vec::new();
    for a in [1usize, 4] {
        for b in [2usize, 5] {
            for c in [3usize, 6] {
                cones.push(vec![a, b, c]);
            }
        }
    }
    let cones: Vec<&[usize]> = cones.iter().map(|c| c.as_slice()).collect();
    fan(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, 0, 0], &[0, -1, 0], &[0, 0, -1]], &cones)
}

/// Rays `e_1, e_2, e_3, -(e_1 + e_2 + e_3)`.
pub fn projective_space_fan() -> Fan {
    fan(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
}

pub fn segment() -> CharacteristicPair {
    from_fan(segment_fan())
}

pub fn projective_plane() -> CharacteristicPair {
    from_fan(projective_plane_fan())
}

pub fn quadrant() -> CharacteristicPair {
    from_fan(quadrant_fan())
}

pub fn hirzebruch() -> CharacteristicPair {
    from_fan(hirzebruch_fan())
}

pub fn octahedral() -> CharacteristicPair {
    from_fan(octahedral_fan())
}

pub fn projective_space() -> CharacteristicPair {
    from_fan(projective_space_fan())
}

/// A hexagon whose rays wind twice around the origin: a multi-fan that is
/// not a fan, taken in real mode.
pub fn double_cover() -> CharacteristicPair {
    let f = fan(
        2,
        &[&[1, 0], &[-1, 1], &[-1, -1], &[2, 1], &[-1, 2], &[0, -1]],
        &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]],
    );
    let sphere = f.orientation().expect("ray determinants are coherent");
    CharacteristicPair::new(sphere, f.rays().to_vec(), Mode::Real).expect("independent on every edge")
}

/// Every fixture with a short name.
pub fn all() -> Vec<(&'static str, CharacteristicPair)> {
    vec![
        ("segment", segment()),
        ("projective_plane", projective_plane()),
        ("quadrant", quadrant()),
        ("hirzebruch", hirzebruch()),
        ("double_cover", double_cover()),
        ("octahedral", octahedral()),
        ("projective_space", projective_space()),
    ]
}
