use gvpoly::arrangements::{
    build_arrangement, complement_homotopy, dominates, enumerate_regions, nerve, union_homotopy, SubspaceArrangement,
};
use gvpoly::cohomology::{
    annihilator, betti, character_basis, cohomology_ring, linear_relation_check, poincare_check, sr_quotient_dims,
    top_products,
};
use gvpoly::complexes::{cell_vector, fmt_face, generic_vector, incoming_index, CharacteristicPair, Mode};
use gvpoly::exact::poly::{monomial_key, var_names};
use gvpoly::exact::scalar::{frac, parse_list};
use gvpoly::exact::{MultiPoly, Vector};
use gvpoly::virtualpoly::{chain_volume, integrate, virtual_chain, volume_polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::document::{load, FanInput, Loaded};
use crate::report::{face, rat, rats, Output};
use crate::{CliError, Command, Options};

const LISTED_MISMATCHES: usize = 10;

type CmdResult = Result<Output, CliError>;

pub fn dispatch(command: Command, inputs: &[Vec<u8>], options: &Options) -> CmdResult {
    if command == Command::Dominates {
        return cmd_dominates(inputs, options);
    }
    let bytes = match inputs {
        [one] => one.as_slice(),
        [] => return Err(CliError::Parse("missing --input".into())),
        _ => return Err(CliError::Parse(format!("{} takes one --input, got {}", command.name(), inputs.len()))),
    };
    match command {
        Command::Validate => cmd_validate(&fan_input(bytes)?),
        Command::Chain => cmd_chain(&fan_input(bytes)?, options),
        Command::Volpoly => cmd_volpoly(&fan_input(bytes)?),
        Command::Integrate => cmd_integrate(&fan_input(bytes)?, options),
        Command::Betti => cmd_betti(&fan_input(bytes)?, options),
        Command::Cohomology => cmd_cohomology(&fan_input(bytes)?),
        Command::Homotopy => cmd_homotopy(bytes, options),
        Command::Nerve => cmd_nerve(bytes, options),
        Command::Cells => cmd_cells(&fan_input(bytes)?, options),
        Command::Bkkcheck => cmd_bkkcheck(&fan_input(bytes)?, options),
        Command::Dominates => unreachable!("handled above"),
    }
}

fn fan_input(bytes: &[u8]) -> Result<FanInput, CliError> {
    match load(bytes)? {
        Loaded::Fan(f) => Ok(f),
        Loaded::Arrangement(_) => Err(CliError::Parse("this command needs a fan document, not an arrangement".into())),
    }
}

fn support_numbers(input: &FanInput, options: &Options, m: usize) -> Result<Vector, CliError> {
    let h = match (&options.h, &input.h) {
        (Some(s), _) => parse_list(s).map_err(|e| CliError::Parse(format!("--h: {e}")))?,
        (None, Some(h)) => h.clone(),
        (None, None) => {
            return Err(CliError::Parse("support numbers required: pass --h or set h in the document".into()))
        }
    };
    if h.len() != m {
        return Err(CliError::Parse(format!("h has {} entries, expected {m}", h.len())));
    }
    Ok(h)
}

fn generic(options: &Options, pair: &CharacteristicPair) -> Result<Option<Vector>, CliError> {
    let Some(fan) = pair.fan() else { return Ok(None) };
    match &options.v {
        Some(s) => {
            let v = parse_list(s).map_err(|e| CliError::Parse(format!("--v: {e}")))?;
            if v.len() != pair.dim() {
                return Err(CliError::Parse(format!("--v has {} entries, expected {}", v.len(), pair.dim())));
            }
            Ok(Some(v))
        }
        None => Ok(Some(generic_vector(fan)?)),
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Integer => "integer",
        Mode::Real => "real",
    }
}

fn cmd_validate(input: &FanInput) -> CmdResult {
    let v = input.validate();
    if !v.is_ok() {
        let mut all = v.fan_report.clone();
        all.merge(v.characteristic_report);
        return Err(CliError::Validation(all.messages()));
    }
    let mut out = Output::new(json!({
        "ok": true,
        "dim": input.fan.dim(),
        "rays": input.fan.rays().len(),
        "cones": input.fan.cones().len(),
        "mode": mode_name(input.mode),
        "multifan": input.multifan,
    }));
    out.warnings = v.warnings;
    Ok(out)
}

fn cmd_chain(input: &FanInput, options: &Options) -> CmdResult {
    let (pair, warnings) = input.pair()?;
    let h = support_numbers(input, options, pair.vertex_count())?;
    let chain = virtual_chain(&pair, &h)?;
    let mut regions: Vec<(String, Value)> = chain
        .regions
        .iter()
        .map(|(r, w)| {
            let v = json!({
                "signs": r.sign_string(),
                "weight": w,
                "volume": r.volume.as_ref().map(rat),
                "witness": rats(&r.witness),
                "vertices": r.vertices.iter().map(|p| rats(p)).collect::<Vec<_>>(),
            });
            (r.sign_string(), v)
        })
        .collect();
    regions.sort_by(|a, b| a.0.cmp(&b.0));
    let volume = chain_volume(&chain);
    let expected = volume_polynomial(&pair)?.eval(&h)?;
    let mut out = Output::new(json!({
        "h": rats(&h),
        "regions": regions.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
        "volume": rat(&volume),
        "volume_polynomial_value": rat(&expected),
    }));
    out.warnings = warnings;
    if volume != expected {
        out.mismatches.push(format!("chain volume {volume} differs from the volume polynomial value {expected}"));
    }
    Ok(out)
}

fn coefficients(p: &MultiPoly) -> Value {
    let mut map = Map::new();
    for (m, c) in p.terms() {
        map.insert(monomial_key(m, p.vars()), rat(c));
    }
    Value::Object(map)
}

fn cmd_volpoly(input: &FanInput) -> CmdResult {
    let (pair, warnings) = input.pair()?;
    let vol = volume_polynomial(&pair)?;
    let mut out = Output::new(json!({
        "polynomial": vol.to_string(),
        "coefficients": coefficients(&vol),
        "degree": pair.dim(),
        "variables": pair.vertex_count(),
    }));
    out.warnings = warnings;
    Ok(out)
}

fn cmd_integrate(input: &FanInput, options: &Options) -> CmdResult {
    let (pair, warnings) = input.pair()?;
    let h = support_numbers(input, options, pair.vertex_count())?;
    let src = options.q.as_deref().ok_or_else(|| CliError::Parse("integrate needs --q".into()))?;
    let q = MultiPoly::parse(src, var_names("x", pair.dim())).map_err(|e| CliError::Parse(format!("--q: {e}")))?;
    let chain = virtual_chain(&pair, &h)?;
    let value = integrate(&q, &chain)?;
    let mut out = Output::new(json!({ "q": q.to_string(), "h": rats(&h), "value": rat(&value) }));
    out.warnings = warnings;
    if q.degree().unwrap_or(0) == 0 {
        let c = q.coeff(&vec![0; pair.dim()]);
        let expected = c * volume_polynomial(&pair)?.eval(&h)?;
        if value != expected {
            out.mismatches.push(format!("constant integrand: {value} differs from {expected}"));
        }
    }
    Ok(out)
}

fn cmd_betti(input: &FanInput, options: &Options) -> CmdResult {
    let (pair, mut warnings) = input.pair()?;
    let mac = betti(&cohomology_ring(&pair)?);
    let sr = sr_quotient_dims(&pair)?;
    let cells = match generic(options, &pair)? {
        Some(v) => Some(cell_vector(pair.fan().expect("generic needs a fan"), &v)?),
        None => {
            warnings.push("no fan attached: the cell route is skipped".into());
            None
        }
    };
    let mut out = Output::new(json!({ "macaulay": mac, "stanley_reisner": sr, "cells": cells }));
    out.warnings = warnings;
    if mac != sr {
        out.mismatches.push(format!("Macaulay dims {mac:?} differ from Stanley-Reisner dims {sr:?}"));
    }
    if let Some(c) = cells.filter(|c| *c != mac) {
        out.mismatches.push(format!("cell counts {c:?} differ from Macaulay dims {mac:?}"));
    }
    Ok(out)
}

fn cmd_cohomology(input: &FanInput) -> CmdResult {
    let (pair, warnings) = input.pair()?;
    let a = cohomology_ring(&pair)?;
    let vol = volume_polynomial(&pair)?;
    let relations: Vec<String> = annihilator(&vol, 1)?.basis.iter().map(|op| op.to_string()).collect();
    let mut tops = Map::new();
    for (subset, value) in top_products(&pair)? {
        tops.insert(fmt_face(&subset), rat(&value));
    }
    let duality = poincare_check(&a);
    let mut out = Output::new(json!({
        "betti": a.dims(),
        "relations_deg1": relations,
        "top_products": tops,
        "pairing_ok": duality.is_ok(),
        "integral": a.is_integral()?,
    }));
    out.warnings = warnings;
    out.mismatches.extend(duality.issues.iter().map(|i| format!("Poincare duality: {i}")));
    for chi in character_basis(pair.dim()) {
        let c = linear_relation_check(&pair, &chi)?;
        if !c.is_ok() {
            out.mismatches.push(format!("linear relation for character {} leaves {}", json!(rats(&chi)), c.residual));
        }
    }
    Ok(out)
}

fn arrangement_of(bytes: &[u8], options: &Options) -> Result<(SubspaceArrangement, Vec<String>), CliError> {
    match load(bytes)? {
        Loaded::Arrangement(a) => Ok((a, Vec::new())),
        Loaded::Fan(input) => {
            let (pair, warnings) = input.pair()?;
            let h = support_numbers(&input, options, pair.vertex_count())?;
            Ok((build_arrangement(&pair, &h)?, warnings))
        }
    }
}

fn cmd_homotopy(bytes: &[u8], options: &Options) -> CmdResult {
    let (a, warnings) = arrangement_of(bytes, options)?;
    let u = union_homotopy(&a)?;
    let regions = enumerate_regions(&a)?;
    let bounded = regions.iter().filter(|r| r.bounded).count();
    let systems = regions.iter().map(|r| a.region_system(&r.sign_vector)).collect::<Result<Vec<_>, _>>()?;
    let c = complement_homotopy(&systems)?;
    let mut out = Output::new(json!({
        "union": {
            "nondegenerate": u.nondegenerate,
            "linearity_space": u.linearity_space.iter().map(|v| rats(v)).collect::<Vec<_>>(),
            "wedge_dim": u.wedge_dim,
            "sphere_count": u.sphere_count,
            "homology_ranks": u.homology_ranks,
            "region_count": u.region_count,
        },
        "regions": regions.len(),
        "bounded_regions": bounded,
        "complement": {
            "retained": c.retained.len(),
            "points": c.points.iter().map(|p| rats(p)).collect::<Vec<_>>(),
            "conclusion": c.conclusion,
        },
    }));
    out.warnings = warnings;
    if u.region_count != regions.len() {
        out.mismatches.push(format!("{} regions enumerated, {} counted", regions.len(), u.region_count));
    }
    if u.nondegenerate && u.sphere_count != bounded {
        out.mismatches.push(format!("{} spheres but {bounded} bounded regions", u.sphere_count));
    }
    let removed = if c.retained.is_empty() { Some(0) } else { c.common_subspace.as_ref().map(|_| c.points.len()) };
    if let Some(k) = removed.filter(|&k| k != u.sphere_count) {
        out.mismatches.push(format!("complement reduces to {k} points but the union has {} spheres", u.sphere_count));
    }
    Ok(out)
}

fn nerve_facets(a: &SubspaceArrangement) -> Value {
    json!(nerve(a).facets().iter().map(|f| face(f)).collect::<Vec<_>>())
}

fn cmd_nerve(bytes: &[u8], options: &Options) -> CmdResult {
    let (a, warnings) = arrangement_of(bytes, options)?;
    let n = nerve(&a);
    let mut out = Output::new(json!({
        "indices": n.index_count(),
        "facets": nerve_facets(&a),
        "f_vector": n.complex().f_vector(),
    }));
    out.warnings = warnings;
    Ok(out)
}

fn cmd_dominates(inputs: &[Vec<u8>], options: &Options) -> CmdResult {
    let [x, y] = inputs else {
        return Err(CliError::Parse(format!("dominates takes two --input files, got {}", inputs.len())));
    };
    let (ax, mut warnings) = arrangement_of(x, options)?;
    let (ay, wy) = arrangement_of(y, options)?;
    warnings.extend(wy);
    let (kx, ky) = (nerve(&ax), nerve(&ay));
    let mut out = Output::new(json!({
        "first_dominates_second": dominates(&kx, &ky)?,
        "second_dominates_first": dominates(&ky, &kx)?,
        "nerves": [nerve_facets(&ax), nerve_facets(&ay)],
    }));
    out.warnings = warnings;
    Ok(out)
}

fn cmd_cells(input: &FanInput, options: &Options) -> CmdResult {
    let (pair, warnings) = input.pair()?;
    let Some(fan) = pair.fan() else {
        return Err(CliError::Math("cells needs a complete fan".into()));
    };
    let v = generic(options, &pair)?.expect("pair has a fan");
    let cells = cell_vector(fan, &v)?;
    let cones = fan
        .cones()
        .iter()
        .map(|c| {
            let idx = incoming_index(fan, c, &v)?;
            Ok(json!({ "cone": face(c), "incoming": face(&idx.incoming), "index": idx.index }))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut out = Output::new(json!({ "v": rats(&v), "cell_vector": cells, "cones": cones }));
    out.warnings = warnings;
    let total: usize = cells.iter().sum();
    if total != fan.cones().len() {
        out.mismatches.push(format!("{total} cells for {} cones", fan.cones().len()));
    }
    Ok(out)
}

fn cmd_bkkcheck(input: &FanInput, options: &Options) -> CmdResult {
    let (pair, warnings) = input.pair()?;
    let vol = volume_polynomial(&pair)?;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut listed = Vec::new();
    let mut mismatches = Vec::new();
    for s in 0..options.samples {
        let h: Vector =
            (0..pair.vertex_count()).map(|_| frac(rng.random_range(-12..=12), rng.random_range(1..=4))).collect();
        let chain = chain_volume(&virtual_chain(&pair, &h)?);
        let poly = vol.eval(&h)?;
        if chain != poly {
            mismatches.push(format!("sample {s}: chain volume {chain}, polynomial {poly}"));
            if listed.len() < LISTED_MISMATCHES {
                listed.push(json!({ "sample": s, "h": rats(&h), "chain": rat(&chain), "polynomial": rat(&poly) }));
            }
        }
    }
    let mut out = Output::new(json!({
        "samples": options.samples,
        "seed": options.seed,
        "agreed": options.samples - mismatches.len(),
        "failures": listed,
    }));
    out.warnings = warnings;
    out.mismatches = mismatches;
    Ok(out)
}
