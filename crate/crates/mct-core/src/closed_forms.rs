//! Direct evaluators for the closed-form threshold theorems on
//! caterpillars, tori, cylinders, grids and disjoint unions, plus the
//! domination-reduction pathway for cylinders and grids.
//!
//! Case boundaries are implemented exactly as the theorems state them;
//! an in-range input matching no case is a coverage bug and panics.

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, make_cycle, make_path, Graph};
use crate::invariants::{exists_deletion_set, has_dominating_set};

/// A closed-form value together with the theorem case that produced
/// it, for auditability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CasedValue {
    pub value: usize,
    pub case: &'static str,
}

/// Both thresholds of a product family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CasedPair {
    pub a1: CasedValue,
    pub a1_prime: CasedValue,
}

impl CasedPair {
    pub fn values(&self) -> (usize, usize) {
        (self.a1.value, self.a1_prime.value)
    }
}

/// a_1 of the caterpillar with an m-vertex spine and l >= 1 leaves per
/// spine vertex. l = 0 is a plain path, outside this theorem; use the
/// formula engine for it.
pub fn caterpillar_a1(m: usize, l: usize) -> Result<CasedValue> {
    if m < 1 {
        return Err(Error::InvalidInput("caterpillar spine must be nonempty".into()));
    }
    if l == 0 {
        return Err(Error::Unsupported(
            "no closed form for l = 0 (a path); use a1_by_alpha or a1_by_deletion".into(),
        ));
    }
    let v = if m <= l {
        CasedValue { value: m, case: "m <= l" }
    } else if m / 2 <= l {
        CasedValue { value: l, case: "floor(m/2) <= l < m" }
    } else if m / 3 <= l + 1 {
        CasedValue { value: l + 1, case: "floor(m/3)-1 <= l <= floor(m/2)-1" }
    } else {
        CasedValue { value: l + 2, case: "l <= floor(m/3)-2" }
    };
    Ok(v)
}

/// Thresholds of the torus C_n [] C_m for m >= n >= 3.
pub fn torus_thresholds(n: usize, m: usize) -> Result<CasedPair> {
    if n < 3 || m < n {
        return Err(Error::InvalidInput(format!(
            "torus thresholds need m >= n >= 3, got ({n}, {m})"
        )));
    }
    let a1 = if n == 3 && m == 3 {
        CasedValue { value: 1, case: "n=m=3" }
    } else if n == 3 && m == 4 {
        CasedValue { value: 2, case: "n=3, m=4" }
    } else if n == 3 {
        CasedValue { value: 3, case: "n=3, m>=5" }
    } else {
        CasedValue { value: 4, case: "m>=n>=4" }
    };
    let a1_prime = if n == 3 && m == 3 {
        CasedValue { value: 1, case: "n=m=3" }
    } else if n == 3 {
        CasedValue { value: 3, case: "n=3, m>=4" }
    } else {
        CasedValue { value: 4, case: "m>=n>=4" }
    };
    Ok(CasedPair { a1, a1_prime })
}

/// Thresholds of the cylinder C_n [] P_m for n >= 3, m >= 2.
pub fn cylinder_thresholds(n: usize, m: usize) -> Result<CasedPair> {
    if n < 3 || m < 2 {
        return Err(Error::InvalidInput(format!(
            "cylinder thresholds need n >= 3 and m >= 2, got ({n}, {m})"
        )));
    }
    let a1 = if n == 3 && (2..=5).contains(&m) {
        CasedValue { value: 2, case: "n=3, 2<=m<=5" }
    } else if n == 4 && m == 2 {
        CasedValue { value: 2, case: "n=4, m=2" }
    } else if n == 3 {
        CasedValue { value: 3, case: "n=3, m>=6" }
    } else if n == 4 && (3..=5).contains(&m) {
        CasedValue { value: 3, case: "n=4, 3<=m<=5" }
    } else if n == 5 && (2..=4).contains(&m) {
        CasedValue { value: 3, case: "n=5, 2<=m<=4" }
    } else if (6..=9).contains(&n) && (m == 2 || m == 3) {
        CasedValue { value: 3, case: "6<=n<=9, m in {2,3}" }
    } else if n >= 10 && m == 2 {
        CasedValue { value: 3, case: "n>=10, m=2" }
    } else {
        CasedValue { value: 4, case: "otherwise" }
    };
    let a1_prime = if n == 3 && m == 2 {
        CasedValue { value: 2, case: "n=3, m=2" }
    } else if n == 3 {
        CasedValue { value: 3, case: "n=3, m>=3" }
    } else if m == 2 {
        CasedValue { value: 3, case: "n>=4, m=2" }
    } else {
        CasedValue { value: 4, case: "n>=4, m>=3" }
    };
    Ok(CasedPair { a1, a1_prime })
}

/// Thresholds of the grid P_n [] P_m for 2 <= n <= m.
pub fn grid_thresholds(n: usize, m: usize) -> Result<CasedPair> {
    if n < 2 || m < n {
        return Err(Error::InvalidInput(format!(
            "grid thresholds need 2 <= n <= m, got ({n}, {m})"
        )));
    }
    let a1 = if n == 2 && (2..=5).contains(&m) {
        CasedValue { value: 2, case: "n=2, 2<=m<=5" }
    } else if n == 3 && (m == 3 || m == 4) {
        CasedValue { value: 2, case: "n=3, m in {3,4}" }
    } else if n == 2 {
        CasedValue { value: 3, case: "n=2, m>=6" }
    } else if n == 3 && (5..=11).contains(&m) {
        CasedValue { value: 3, case: "n=3, 5<=m<=11" }
    } else if n == 4 && (4..=7).contains(&m) {
        CasedValue { value: 3, case: "n=4, 4<=m<=7" }
    } else if n == 5 && m == 5 {
        CasedValue { value: 3, case: "n=m=5" }
    } else {
        CasedValue { value: 4, case: "otherwise" }
    };
    let a1_prime = if n == 2 && m == 2 {
        CasedValue { value: 2, case: "n=m=2" }
    } else if n == 2 {
        CasedValue { value: 3, case: "n=2, m>=3" }
    } else {
        CasedValue { value: 4, case: "m>=n>=3" }
    };
    Ok(CasedPair { a1, a1_prime })
}

/// Bounds on a_1 of a disjoint union from the parts' thresholds:
/// (max, sum).
pub fn union_bounds(a1_g1: usize, a1_g2: usize) -> Result<(usize, usize)> {
    if a1_g1 == 0 || a1_g2 == 0 {
        return Err(Error::InvalidInput("thresholds are positive integers".into()));
    }
    Ok((a1_g1.max(a1_g2), a1_g1 + a1_g2))
}

/// a_1 of the union of the caterpillars with spines k and l, both with
/// k+i leaves per spine vertex: exactly k+i for 1 <= l <= k, 0 <= i <= l.
pub fn realization_value(k: usize, l: usize, i: usize) -> Result<usize> {
    if !(1 <= l && l <= k && i <= l) {
        return Err(Error::InvalidInput(format!(
            "realization needs 1 <= l <= k and 0 <= i <= l, got ({k}, {l}, {i})"
        )));
    }
    Ok(k + i)
}

/// a_1 of the cylinder C_n [] P_m via the domination reduction: 3 iff
/// the inner cylinder C_n [] P_(m-2) has a dominating set of size at
/// most 3, else 4. Valid for n >= 4, m >= 3; the implied lower bound
/// a_1 > 2 is re-checked against the deletion formula.
pub fn cylinder_a1_via_domination(n: usize, m: usize) -> Result<usize> {
    if n < 4 || m < 3 {
        return Err(Error::InvalidInput(format!(
            "domination pathway needs n >= 4 and m >= 3, got ({n}, {m})"
        )));
    }
    let cyl = cartesian_product(&make_cycle(n)?, &make_path(m)?)?;
    if exists_deletion_set(&cyl, 2).is_some() {
        return Err(Error::Domain(format!(
            "C_{n} [] P_{m} unexpectedly admits a_1 <= 2; theorem hypothesis violated"
        )));
    }
    let inner = cartesian_product(&make_cycle(n)?, &make_path(m - 2)?)?;
    Ok(if has_dominating_set(&inner, 3).is_some() { 3 } else { 4 })
}

/// a_1 of the grid P_n [] P_m via the domination reduction, for
/// 3 <= n <= m: 2 only for (3,3) and (3,4); otherwise 3 iff the inner
/// grid P_(n-2) [] P_(m-2) has a dominating set of size at most 3.
pub fn grid_a1_via_domination(n: usize, m: usize) -> Result<usize> {
    if n < 3 || m < n {
        return Err(Error::InvalidInput(format!(
            "domination pathway needs 3 <= n <= m, got ({n}, {m})"
        )));
    }
    if n == 3 && (m == 3 || m == 4) {
        return Ok(2);
    }
    let inner = cartesian_product(&make_path(n - 2)?, &make_path(m - 2)?)?;
    Ok(if has_dominating_set(&inner, 3).is_some() { 3 } else { 4 })
}

/// Builds the graph of a product family member, routing helper for
/// callers that want to validate closed forms against the engines.
pub fn family_graph(family: &str, n: usize, m: usize) -> Result<Graph> {
    match family {
        "torus" => cartesian_product(&make_cycle(n)?, &make_cycle(m)?),
        "cylinder" => cartesian_product(&make_cycle(n)?, &make_path(m)?),
        "grid" => cartesian_product(&make_path(n)?, &make_path(m)?),
        other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
    }
}
