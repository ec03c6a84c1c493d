//! Constructors for the standard group families, as validated Cayley tables.
//!
//! Elements come out in a documented canonical order (powers of the rotation
//! generator first, then the reflected coset), so tests and reports can refer
//! to named elements deterministically.

use std::collections::HashMap;
use std::path::Path;

use crate::error::GroupError;
use crate::group::FiniteGroup;

fn power_name(generator: &str, i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => generator.to_string(),
        _ => format!("{generator}^{i}"),
    }
}

fn coset_name(rot: &str, i: usize, refl: &str) -> String {
    match i {
        0 => refl.to_string(),
        1 => format!("{rot}{refl}"),
        _ => format!("{rot}^{i}{refl}"),
    }
}

/// Cyclic group of order `n`, generator `a`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 1 {
        return Err(GroupError::InvalidParameter("cyclic needs n >= 1".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push((i + j) % n);
        }
    }
    let names = (0..n).map(|i| power_name("a", i)).collect();
    FiniteGroup::from_flat_table(n, table, names)
}

/// Dihedral group of order `2n` with `r^n = s^2 = e` and `srs = r^-1`.
///
/// Elements `0..n` are `r^i`, elements `n..2n` are `r^i s`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter("dihedral needs n >= 3".into()));
    }
    let order = 2 * n;
    let mut table = vec![0usize; order * order];
    let idx = |rot: usize, refl: bool| if refl { n + rot } else { rot };
    for i in 0..n {
        for j in 0..n {
            // r^i * r^j, r^i * r^j s, r^i s * r^j, r^i s * r^j s
            table[idx(i, false) * order + idx(j, false)] = idx((i + j) % n, false);
            table[idx(i, false) * order + idx(j, true)] = idx((i + j) % n, true);
            table[idx(i, true) * order + idx(j, false)] = idx((i + n - j % n) % n, true);
            table[idx(i, true) * order + idx(j, true)] = idx((i + n - j % n) % n, false);
        }
    }
    let mut names: Vec<String> = (0..n).map(|i| power_name("r", i)).collect();
    names.extend((0..n).map(|i| coset_name("r", i, "s")));
    FiniteGroup::from_flat_table(order, table, names)
}

/// Semidihedral group of order `8n` with `a^(4n) = b^2 = e` and `ba = a^(2n-1)b`.
///
/// Elements `0..4n` are `a^i`, elements `4n..8n` are `a^i b`.
pub fn semidihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(GroupError::InvalidParameter(
            "semidihedral needs n >= 2".into(),
        ));
    }
    let m = 4 * n; // order of a
    let order = 8 * n;
    let twist = 2 * n - 1; // b a = a^twist b
    let mut table = vec![0usize; order * order];
    let idx = |rot: usize, refl: bool| if refl { m + rot } else { rot };
    for i in 0..m {
        for j in 0..m {
            table[idx(i, false) * order + idx(j, false)] = idx((i + j) % m, false);
            table[idx(i, false) * order + idx(j, true)] = idx((i + j) % m, true);
            table[idx(i, true) * order + idx(j, false)] = idx((i + j * twist) % m, true);
            table[idx(i, true) * order + idx(j, true)] = idx((i + j * twist) % m, false);
        }
    }
    let mut names: Vec<String> = (0..m).map(|i| power_name("a", i)).collect();
    names.extend((0..m).map(|i| coset_name("a", i, "b")));
    FiniteGroup::from_flat_table(order, table, names)
}

/// Generalized quaternion group of order `4n` with `a^n = b^2`, `a^(2n) = e`
/// and `b^-1 a b = a^-1`.
///
/// Elements `0..2n` are `a^i`, elements `2n..4n` are `a^i b`.
pub fn generalized_quaternion(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(GroupError::InvalidParameter(
            "generalized quaternion needs n >= 2".into(),
        ));
    }
    let m = 2 * n; // order of a
    let order = 4 * n;
    let mut table = vec![0usize; order * order];
    let idx = |rot: usize, refl: bool| if refl { m + rot } else { rot };
    for i in 0..m {
        for j in 0..m {
            table[idx(i, false) * order + idx(j, false)] = idx((i + j) % m, false);
            table[idx(i, false) * order + idx(j, true)] = idx((i + j) % m, true);
            // a^i b a^j = a^(i-j) b ; a^i b a^j b = a^(i-j) b^2 = a^(i-j+n)
            table[idx(i, true) * order + idx(j, false)] = idx((i + m - j) % m, true);
            table[idx(i, true) * order + idx(j, true)] = idx((i + m - j + n) % m, false);
        }
    }
    let mut names: Vec<String> = (0..m).map(|i| power_name("a", i)).collect();
    names.extend((0..m).map(|i| coset_name("a", i, "b")));
    FiniteGroup::from_flat_table(order, table, names)
}

/// All permutations of `0..n` in lexicographic one-line order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn permutation_parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = p[v];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2
}

/// Cycle notation with 1-based points, fixed points omitted, "(1)" for the
/// identity. Matches the usual rendering for small permutation groups.
fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v + 1);
            v = p[v];
        }
        cycles.push(cycle);
    }
    if cycles.is_empty() {
        return "(1)".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            format!("({})", inner.join(""))
        })
        .collect()
}

fn permutation_group(perms: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    let order = perms.len();
    if order > crate::group::DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderTooLarge {
            order,
            cap: crate::group::DEFAULT_ORDER_CAP,
        });
    }
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let n = perms[0].len();
    let mut table = vec![0usize; order * order];
    let mut product = vec![0usize; n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // apply q first, then p
            for (x, slot) in product.iter_mut().enumerate() {
                *slot = p[q[x]];
            }
            table[i * order + j] = *index
                .get(product.as_slice())
                .expect("closed under composition");
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat_table(order, table, names)
}

/// Symmetric group on `n` points.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 1 {
        return Err(GroupError::InvalidParameter(
            "symmetric needs n >= 1".into(),
        ));
    }
    let mut order: usize = 1;
    for k in 2..=n {
        order = order.saturating_mul(k);
    }
    if order > crate::group::DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderTooLarge {
            order,
            cap: crate::group::DEFAULT_ORDER_CAP,
        });
    }
    permutation_group(permutations(n))
}

/// Alternating group on `n` points (even permutations).
pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter(
            "alternating needs n >= 3".into(),
        ));
    }
    let mut order: usize = 1;
    for k in 2..=n {
        order = order.saturating_mul(k);
    }
    order /= 2;
    if order > crate::group::DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderTooLarge {
            order,
            cap: crate::group::DEFAULT_ORDER_CAP,
        });
    }
    let perms = permutations(n)
        .into_iter()
        .filter(|p| permutation_parity(p) == 0)
        .collect();
    permutation_group(perms)
}

/// Direct product with pairwise operation; element `(g, h)` has index
/// `g * |H| + h` and name `(g,h)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let order = g
        .order()
        .checked_mul(h.order())
        .ok_or_else(|| GroupError::InvalidParameter("product order overflow".into()))?;
    if order > crate::group::DEFAULT_ORDER_CAP {
        return Err(GroupError::OrderTooLarge {
            order,
            cap: crate::group::DEFAULT_ORDER_CAP,
        });
    }
    let hn = h.order();
    let mut table = vec![0usize; order * order];
    for g1 in 0..g.order() {
        for h1 in 0..hn {
            for g2 in 0..g.order() {
                for h2 in 0..hn {
                    let left = g1 * hn + h1;
                    let right = g2 * hn + h2;
                    table[left * order + right] = g.op(g1, g2) * hn + h.op(h1, h2);
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for g1 in 0..g.order() {
        for h1 in 0..hn {
            names.push(format!("({},{})", g.name(g1), h.name(h1)));
        }
    }
    FiniteGroup::from_flat_table(order, table, names)
}

/// Builds a group from a family spec string.
///
/// Grammar: `cyclic:N`, `dihedral:N`, `semidihedral:N`, `quaternion:N`,
/// `symmetric:N`, `alternating:N`, or `product:SPEC,SPEC[,SPEC...]` over
/// non-product factors.
pub fn from_spec(spec: &str) -> Result<FiniteGroup, GroupError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("product:") {
        let factors: Vec<&str> = rest.split(',').collect();
        if factors.len() < 2 {
            return Err(GroupError::InvalidParameter(
                "product needs at least two comma-separated factors".into(),
            ));
        }
        let mut acc: Option<FiniteGroup> = None;
        for factor in factors {
            if factor.starts_with("product:") {
                return Err(GroupError::InvalidParameter(
                    "nested products are not supported; list all factors once".into(),
                ));
            }
            let g = from_spec(factor)?;
            acc = Some(match acc {
                None => g,
                Some(prev) => direct_product(&prev, &g)?,
            });
        }
        return Ok(acc.expect("at least two factors"));
    }
    let (family, param) = spec
        .split_once(':')
        .ok_or_else(|| GroupError::UnknownFamily(spec.to_string()))?;
    let n: usize = param
        .parse()
        .map_err(|_| GroupError::InvalidParameter(format!("bad parameter '{param}'")))?;
    match family {
        "cyclic" => cyclic(n),
        "dihedral" => dihedral(n),
        "semidihedral" => semidihedral(n),
        "quaternion" => generalized_quaternion(n),
        "symmetric" => symmetric(n),
        "alternating" => alternating(n),
        _ => Err(GroupError::UnknownFamily(spec.to_string())),
    }
}

/// Resolves a group spec: family string first, then a Cayley file path.
pub fn resolve_spec(spec: &str) -> Result<FiniteGroup, GroupError> {
    match from_spec(spec) {
        Ok(g) => Ok(g),
        Err(GroupError::UnknownFamily(_)) if Path::new(spec).is_file() => {
            FiniteGroup::load_cayley(Path::new(spec))
        }
        Err(e) => Err(e),
    }
}

/// The named groups the certification suite and tests sweep over, capped by
/// group order. Spec strings double as display names.
pub fn builtin_roster(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut specs: Vec<String> = Vec::new();
    for n in [2usize, 3, 4, 5, 6, 8, 12] {
        if n <= max_order {
            specs.push(format!("cyclic:{n}"));
        }
    }
    for n in 3..=32 {
        if 2 * n <= max_order {
            specs.push(format!("dihedral:{n}"));
        }
    }
    for n in 2..=8 {
        if 8 * n <= max_order {
            specs.push(format!("semidihedral:{n}"));
        }
    }
    for n in 2..=16 {
        if 4 * n <= max_order {
            specs.push(format!("quaternion:{n}"));
        }
    }
    for n in 3..=4 {
        let order: usize = (2..=n).product();
        if order <= max_order {
            specs.push(format!("symmetric:{n}"));
        }
    }
    for n in 4..=5 {
        let order: usize = (2..=n).product::<usize>() / 2;
        if order <= max_order {
            specs.push(format!("alternating:{n}"));
        }
    }
    for spec in [
        "product:cyclic:2,cyclic:2",
        "product:dihedral:3,cyclic:2",
        "product:quaternion:2,cyclic:2",
    ] {
        let g = from_spec(spec).expect("roster spec builds");
        if g.order() <= max_order {
            specs.push(spec.to_string());
        }
    }
    specs
        .into_iter()
        .map(|s| {
            let g = from_spec(&s).expect("roster spec builds");
            (s, g)
        })
        .collect()
}
