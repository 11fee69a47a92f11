use serde_json::json;
use sklyanin_core::cocycle::{
    coboundary_table, enumerate_gradings, scaling_isomorphism_check, scaling_table,
};
use sklyanin_core::ncalg::{sklyanin_presentation, twisted_sklyanin_presentation};

use super::details;
use crate::config::RunConfig;
use crate::report::{timed, CheckReport, Status};
use crate::CliError;

pub fn isomorphisms(config: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    let params = &config.params;
    let r = params.radicals()?;
    let spec = r.spec.clone();
    let a = sklyanin_presentation(params)?;
    let mut out = Vec::new();

    out.push(timed("isomorphisms/coboundaries", || {
        let mut rows = Vec::new();
        let mut ok = true;
        for row in coboundary_table() {
            let v = row.verify()?;
            ok &= v;
            rows.push(json!({ "sigma": row.label, "verified": v }));
        }
        Ok((
            Status::from_bool(ok),
            details(config, &spec, json!({ "rows": rows })),
        ))
    })?);

    out.push(timed("isomorphisms/scaling", || {
        let mut rows = Vec::new();
        let mut ok = true;
        for row in scaling_table(params, &r)? {
            let valid = row.target.check().is_ok();
            let target = twisted_sklyanin_presentation(&row.target)?;
            let v = valid && scaling_isomorphism_check(&a, &row.grading, &row.scale, &target)?;
            ok &= v;
            rows.push(json!({
                "grading": row.grading.to_json(),
                "scale": row.scale.iter().map(|c| c.to_exact_string()).collect::<Vec<_>>(),
                "target": row.target.to_json(),
                "target_valid": valid,
                "verified": v,
            }));
        }
        Ok((
            Status::from_bool(ok),
            details(config, &spec, json!({ "rows": rows })),
        ))
    })?);

    out.push(timed("isomorphisms/gradings", || {
        let classes = enumerate_gradings();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let total: usize = sizes.iter().sum();
        Ok((
            Status::from_bool(total == 24 && sizes.iter().all(|&n| n == 6)),
            details(
                config,
                &spec,
                json!({ "total": total, "class_sizes": sizes }),
            ),
        ))
    })?);
    Ok(out)
}
