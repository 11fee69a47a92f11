use serde_json::{json, Value};
use sklyanin_core::cocycle::KleinElement;
use sklyanin_core::gradedmod::{
    cyclic_codimension_check, fat_point, generated_in_degree_zero, group_intertwiner_check,
    point_module, restrict_and_decompose, theta_kills, ModuleError,
};
use sklyanin_core::ncalg::{
    sklyanin_presentation, theta1, theta2, twisted_sklyanin_presentation, Params,
};
use sklyanin_core::pointscheme::{
    curve_point, known_points_in, multilinearize, orbit_representatives, pairwise_distinct, Point,
    PointError,
};
use sklyanin_core::TowerScalar;

use super::details;
use crate::config::RunConfig;
use crate::report::{timed, CheckReport, Status};
use crate::CliError;

/// First integer seed giving a curve point with four nonzero coordinates.
fn curve_fixture(params: &Params) -> Result<(i64, Point), CliError> {
    for seed in 1..=16 {
        match curve_point(params, &TowerScalar::from_int(seed)) {
            Ok(p) if p.nonzero_count() == 4 => return Ok((seed, p)),
            Ok(_) | Err(PointError::DegenerateSeed(_)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(CliError::Arithmetic(
        "no integer seed up to 16 gives a curve point".into(),
    ))
}

/// Turns module-shape failures into a failed check instead of an error.
fn outcome(r: Result<(bool, Value), ModuleError>) -> Result<(bool, Value), CliError> {
    match r {
        Ok(x) => Ok(x),
        Err(
            e @ (ModuleError::RelationFails(_)
            | ModuleError::Decomposition(_)
            | ModuleError::NotPointModule(_)
            | ModuleError::TooFewNonzero(_)),
        ) => Ok((false, json!({ "error": e.to_string() }))),
        Err(e) => Err(e.into()),
    }
}

pub fn modules(config: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    let params = &config.params;
    let d = config.module_depth;
    let a = sklyanin_presentation(params)?;
    let t = twisted_sklyanin_presentation(params)?;
    let sa = multilinearize(&a)?;
    let st = multilinearize(&t)?;
    let (seed, p) = curve_fixture(params)?;
    let pm = point_module(&sa, &p, d)?;
    let spec = p.coords()[3].spec().clone();
    let base = json!({ "seed": seed, "point": p.to_json(), "depth": d });
    let mut out = Vec::new();

    out.push(timed("modules/fat-point", || {
        let (ok, extra) = outcome((|| {
            let fat = fat_point(&pm, &t, d)?;
            let generated = generated_in_degree_zero(&fat)?;
            let one = TowerScalar::one;
            let zero = TowerScalar::zero;
            let cases = [
                ("(m,m)", vec![one(), one()]),
                ("(m,0)", vec![one(), zero()]),
                ("(0,m)", vec![zero(), one()]),
            ];
            let mut cyclic = serde_json::Map::new();
            for (name, v) in &cases {
                let mut all = true;
                for j in 0..d {
                    all &= cyclic_codimension_check(&fat, j, v)?;
                }
                cyclic.insert(name.to_string(), json!(all));
            }
            let mut intertwiners = serde_json::Map::new();
            for g in KleinElement::ALL {
                intertwiners.insert(
                    g.name().into(),
                    json!(group_intertwiner_check(&pm, g, &t, d)?),
                );
            }
            let ok = generated
                && cyclic.values().all(|v| v == &json!(true))
                && intertwiners.values().all(|v| v == &json!(true));
            Ok((
                ok,
                json!({
                    "dims": fat.dims(),
                    "relations_hold": true,
                    "generated_in_degree_zero": generated,
                    "cyclic_codimension": cyclic,
                    "intertwiners": intertwiners,
                }),
            ))
        })())?;
        Ok((
            Status::from_bool(ok),
            details(config, &spec, json!({ "fixture": base, "result": extra })),
        ))
    })?);

    out.push(timed("modules/restriction", || {
        let (ok, extra) = outcome((|| {
            let rep = restrict_and_decompose(&pm, &t, &a, d)?;
            let orbit: Vec<Point> = KleinElement::ALL.iter().map(|&g| p.act(g)).collect();
            Ok((rep.points() == orbit && rep.distinct()?, rep.to_json()))
        })())?;
        Ok((
            Status::from_bool(ok),
            details(config, &spec, json!({ "fixture": base, "result": extra })),
        ))
    })?);

    let r = params.radicals()?;
    let rspec = r.spec.clone();
    out.push(timed("modules/dual-restriction", || {
        let mut ok = true;
        let mut per_orbit = Vec::new();
        for (h, q) in orbit_representatives(&r)? {
            let (good, extra) = outcome((|| {
                let qm = point_module(&st, &q, d)?;
                let rep = restrict_and_decompose(&qm, &a, &t, d)?;
                let expect: Vec<Point> = KleinElement::ALL.iter().map(|&g| q.act(g)).collect();
                let found = rep.points();
                let same = found.len() == 4 && expect.iter().all(|e| found.contains(e));
                Ok((
                    same && rep.distinct()? && pairwise_distinct(&found)?,
                    rep.to_json(),
                ))
            })())?;
            ok &= good;
            per_orbit.push(json!({ "label": h.name(), "point": q.to_json(), "result": extra }));
        }
        Ok((
            Status::from_bool(ok),
            details(config, &rspec, json!({ "orbits": per_orbit })),
        ))
    })?);

    out.push(timed("modules/no-point-modules", || {
        let (th1, th2) = (theta1(), theta2(params));
        let mut ok = true;
        let mut rows = Vec::new();
        for q in known_points_in(&r)? {
            let qm = point_module(&st, &q, d)?;
            let k1 = theta_kills(&qm, &th1)?;
            let k2 = theta_kills(&qm, &th2)?;
            ok &= !(k1 && k2);
            rows.push(json!({ "point": q.to_json(), "theta1_kills": k1, "theta2_kills": k2 }));
        }
        Ok((
            Status::from_bool(ok),
            details(config, &rspec, json!({ "points": rows })),
        ))
    })?);
    Ok(out)
}
