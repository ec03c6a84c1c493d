//! Batch certification: catalog invariants, construction soundness and
//! classifier/solver cross-checks over ranges of built-in groups.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rcg_core::commuting::{isolated_involutions, mas_by_centralizer_oracle};
use rcg_core::construct::{
    color_nontrivial_center, color_pstar, color_trivial_center_small_t, color_trivial_center_t,
    color_tuple_two, fits_in_pow2,
};
use rcg_core::{
    classify_rc, cross_check, families, maximal_abelian_subgroups, ClassifyError, FiniteGroup,
    SearchConfig,
};

use crate::CliError;

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

struct Row {
    spec: String,
    order: usize,
    branch: &'static str,
    checks: Vec<Check>,
}

pub fn run_suite(specs: &[String], cfg: &SearchConfig, json: bool) -> Result<(), CliError> {
    let rows: Vec<Mutex<Option<Row>>> = specs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = cfg.threads.max(1).min(specs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= specs.len() {
                    return;
                }
                let row = run_group(&specs[i], cfg);
                *rows[i].lock().expect("row lock") = Some(row);
            });
        }
    });
    let rows: Vec<Row> = rows
        .into_iter()
        .map(|slot| slot.into_inner().expect("row lock").expect("row computed"))
        .collect();

    let all_passed = rows.iter().all(|r| r.checks.iter().all(|c| c.passed));
    let branch_f: Vec<&str> = rows
        .iter()
        .filter(|r| r.branch == "f")
        .map(|r| r.spec.as_str())
        .collect();

    if json {
        let value = serde_json::json!({
            "groups": rows.iter().map(|r| serde_json::json!({
                "spec": r.spec,
                "order": r.order,
                "branch": r.branch,
                "checks": r.checks.iter().map(|c| serde_json::json!({
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "branch_f_groups": branch_f,
            "passed": all_passed,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        for row in &rows {
            let mut line = format!(
                "{:<18} order {:<3} branch {:<2}",
                row.spec, row.order, row.branch
            );
            for check in &row.checks {
                let mark = if check.passed { "OK" } else { "FAIL" };
                line.push_str(&format!(" | {} {} ({})", check.name, mark, check.detail));
            }
            println!("{line}");
        }
        let checks: usize = rows.iter().map(|r| r.checks.len()).sum();
        println!(
            "suite: {} groups, {} checks, {}",
            rows.len(),
            checks,
            if all_passed { "all passed" } else { "FAILURES" }
        );
        if branch_f.is_empty() {
            println!("branch-f groups: none");
        } else {
            println!("branch-f groups (bounds-only classifications): {branch_f:?}");
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(CliError::Falsified("suite found failures".into()))
    }
}

fn run_group(spec: &str, cfg: &SearchConfig) -> Row {
    let group = match families::resolve_spec(spec) {
        Ok(g) => g,
        Err(e) => {
            return Row {
                spec: spec.to_string(),
                order: 0,
                branch: "-",
                checks: vec![Check {
                    name: "build",
                    passed: false,
                    detail: e.to_string(),
                }],
            }
        }
    };
    let order = group.order();
    let mut checks = vec![catalog_check(&group), construction_check(&group)];
    let (branch, check) = crosscheck(&group, cfg);
    checks.push(check);
    Row {
        spec: spec.to_string(),
        order,
        branch,
        checks,
    }
}

fn catalog_check(group: &FiniteGroup) -> Check {
    let fail = |detail: String| Check {
        name: "catalog",
        passed: false,
        detail,
    };
    let catalog = match maximal_abelian_subgroups(group) {
        Ok(c) => c,
        Err(e) => return fail(e.to_string()),
    };
    let oracle = mas_by_centralizer_oracle(group);
    if catalog != oracle {
        return fail("clique and centralizer enumerations disagree".into());
    }
    let center = group.center();
    let mut union = center.clone();
    for sub in &catalog.subgroups {
        if !sub.is_abelian_subgroup(group) {
            return fail("catalog member is not an abelian subgroup".into());
        }
        if !center.is_subset_of(sub) {
            return fail("catalog member misses the center".into());
        }
        union = union.union(sub);
    }
    if union != group.all_elements() {
        return fail("catalog union does not cover the group".into());
    }
    if !group.is_abelian() && catalog.len() < 3 {
        return fail(format!(
            "nonabelian group with only {} subgroups",
            catalog.len()
        ));
    }
    if catalog.order2_count != isolated_involutions(group).len() {
        return fail("order-2 count disagrees with isolated involutions".into());
    }
    Check {
        name: "catalog",
        passed: true,
        detail: format!("m={}, t={}", catalog.len(), catalog.order2_count),
    }
}

fn construction_check(group: &FiniteGroup) -> Check {
    if group.is_abelian() {
        return Check {
            name: "constructions",
            passed: true,
            detail: "abelian; none applicable".into(),
        };
    }
    let fail = |detail: String| Check {
        name: "constructions",
        passed: false,
        detail,
    };
    let catalog = match maximal_abelian_subgroups(group) {
        Ok(c) => c,
        Err(e) => return fail(e.to_string()),
    };
    let z = group.center().len();
    let t = catalog.order2_count;
    let m = catalog.len();
    let mut runs = 0usize;

    let mut check_colors =
        |result: Result<rcg_core::ConstructionReport, rcg_core::ConstructError>,
         tag: &str,
         expected: u32|
         -> Option<String> {
            match result {
                Ok(report) => {
                    if report.coloring.k() != expected {
                        return Some(format!(
                            "scheme {tag} used {} colors, advertised {expected}",
                            report.coloring.k()
                        ));
                    }
                    runs += 1;
                    None
                }
                Err(e) => Some(format!("scheme {tag}: {e}")),
            }
        };

    if z >= 2 {
        if let Some(err) = check_colors(color_nontrivial_center(group), "3a", 3) {
            return fail(err);
        }
    }
    if z == 1 && t <= 3 {
        if let Some(err) = check_colors(color_trivial_center_small_t(group), "3b", 3) {
            return fail(err);
        }
    }
    if z >= 2 && fits_in_pow2(m, z) {
        if let Some(err) = check_colors(color_tuple_two(group), "4", 2) {
            return fail(err);
        }
    }
    for (core, collections) in catalog.common_intersections() {
        if core.len() < 2 {
            continue;
        }
        for collection in collections {
            let members: Vec<_> = collection
                .iter()
                .map(|&i| catalog.subgroups[i].clone())
                .collect();
            let expected = if fits_in_pow2(members.len(), core.len()) {
                2
            } else {
                3
            };
            if let Some(err) = check_colors(color_pstar(group, &core, &members), "5", expected) {
                return fail(err);
            }
        }
    }
    if z == 1 && t >= 4 {
        if let Some(err) = check_colors(color_trivial_center_t(group), "7", t as u32) {
            return fail(err);
        }
    }
    Check {
        name: "constructions",
        passed: true,
        detail: format!("{runs} verified"),
    }
}

fn crosscheck(group: &FiniteGroup, cfg: &SearchConfig) -> (&'static str, Check) {
    let branch = classify_rc(group).map(|c| c.branch).unwrap_or("-");
    match cross_check(group, cfg) {
        Ok(report) => (
            branch,
            Check {
                name: "cross-check",
                passed: true,
                detail: report.detail,
            },
        ),
        Err(ClassifyError::Mismatch { classifier, solver }) => (
            branch,
            Check {
                name: "cross-check",
                passed: false,
                detail: format!("classifier {classifier:?} vs solver {solver:?}"),
            },
        ),
        Err(e) => (
            branch,
            Check {
                name: "cross-check",
                passed: false,
                detail: e.to_string(),
            },
        ),
    }
}
