//! Row-factorization matrices of pseudo-Frobenius numbers.
//!
//! For `f` in PF(S) with minimal generators `g_1 < ... < g_e`, an RF-matrix
//! has `a_ii = -1`, non-negative off-diagonal entries, and every row sums to
//! `f` against the generators. Row `i` is therefore a factorization of
//! `f + g_i` that does not use `g_i`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::configenum::{SharedRows, ZeroConfig};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RfError {
    #[error("more than {cap} results")]
    CapExceeded { cap: usize },
    #[error("{0} is not a pseudo-Frobenius number")]
    NotPseudoFrobenius(i64),
    #[error("the semigroup is not almost symmetric")]
    NotAlmostSymmetric,
    #[error("matrix orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid RF-matrix: {0}")]
    Invalid(String),
}

/// A square matrix with diagonal `-1` whose rows factorize `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RfMatrix {
    target: i64,
    entries: Vec<Vec<i64>>,
}

impl RfMatrix {
    /// Validate `entries` as an RF-matrix for `target` over the generators of `s`.
    pub fn new(s: &NumericalSemigroup, target: i64, entries: Vec<Vec<i64>>) -> Result<Self, RfError> {
        let g = s.generators();
        let e = g.len();
        if entries.len() != e || entries.iter().any(|r| r.len() != e) {
            return Err(RfError::Invalid(format!("expected a {e}x{e} matrix")));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != -1 {
                    return Err(RfError::Invalid(format!("diagonal entry ({i},{i}) is {a}")));
                }
                if i != j && a < 0 {
                    return Err(RfError::Invalid(format!("entry ({i},{j}) is negative")));
                }
            }
            let sum: i64 = row.iter().zip(g).map(|(a, gj)| a * gj).sum();
            if sum != target {
                return Err(RfError::Invalid(format!("row {i} sums to {sum}, not {target}")));
            }
        }
        Ok(RfMatrix { target, entries })
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }
}

impl fmt::Display for RfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// All factorizations of `v` over the generators of `s`, optionally with the
/// coefficient of generator `excluded` forced to zero.
///
/// Coefficient vectors are indexed like `s.generators()` and returned in
/// ascending lexicographic order. More than `cap` results is an error.
pub fn factorizations(
    s: &NumericalSemigroup,
    v: i64,
    excluded: Option<usize>,
    cap: usize,
) -> Result<Vec<Vec<i64>>, RfError> {
    let g = s.generators();
    let mut out = Vec::new();
    if v < 0 {
        return Ok(out);
    }
    let active: Vec<usize> = (0..g.len()).rev().filter(|&i| Some(i) != excluded).collect();
    let mut coeffs = vec![0i64; g.len()];

    fn dfs(
        g: &[i64],
        active: &[usize],
        remaining: i64,
        coeffs: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        cap: usize,
    ) -> Result<(), RfError> {
        let Some((&idx, rest)) = active.split_first() else {
            if remaining == 0 {
                if out.len() == cap {
                    return Err(RfError::CapExceeded { cap });
                }
                out.push(coeffs.clone());
            }
            return Ok(());
        };
        let gi = g[idx];
        if rest.is_empty() {
            if remaining % gi == 0 {
                coeffs[idx] = remaining / gi;
                dfs(g, rest, 0, coeffs, out, cap)?;
                coeffs[idx] = 0;
            }
            return Ok(());
        }
        for c in 0..=remaining / gi {
            coeffs[idx] = c;
            dfs(g, rest, remaining - c * gi, coeffs, out, cap)?;
        }
        coeffs[idx] = 0;
        Ok(())
    }

    dfs(g, &active, v, &mut coeffs, &mut out, cap)?;
    out.sort_unstable();
    Ok(out)
}

/// The factorizations available for each row of an RF-matrix of `target`.
///
/// RF-matrices are exactly the choices of one factorization per row, so most
/// questions about "all RF-matrices" reduce to per-row questions here
/// without materializing the product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowFactorizations {
    target: i64,
    rows: Vec<Vec<Vec<i64>>>,
}

impl RowFactorizations {
    pub fn compute(s: &NumericalSemigroup, f: i64, cap: usize) -> Result<Self, RfError> {
        if s.pseudo_frobenius().binary_search(&f).is_err() {
            return Err(RfError::NotPseudoFrobenius(f));
        }
        Self::compute_unchecked(s, f, cap)
    }

    pub(crate) fn compute_unchecked(s: &NumericalSemigroup, f: i64, cap: usize) -> Result<Self, RfError> {
        let rows = s
            .generators()
            .iter()
            .enumerate()
            .map(|(i, &gi)| {
                let mut row = factorizations(s, f + gi, Some(i), cap)?;
                for c in &mut row {
                    c[i] = -1;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>, RfError>>()?;
        Ok(RowFactorizations { target: f, rows })
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    /// Candidate rows for row `i`, with the `-1` already on the diagonal.
    pub fn row(&self, i: usize) -> &[Vec<i64>] {
        &self.rows[i]
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of RF-matrices; saturates at `u128::MAX`.
    pub fn matrix_count(&self) -> u128 {
        self.rows
            .iter()
            .fold(1u128, |acc, r| acc.saturating_mul(r.len() as u128))
    }

    /// The first RF-matrix in lexicographic order.
    pub fn canonical(&self) -> RfMatrix {
        RfMatrix {
            target: self.target,
            entries: self.rows.iter().map(|r| r[0].clone()).collect(),
        }
    }

    /// `(i, j)` is true when some RF-matrix has a positive entry there.
    pub fn any_positive(&self) -> Vec<Vec<bool>> {
        self.support(|a| a > 0)
    }

    /// `(i, j)` is true when some RF-matrix has a zero entry there.
    pub fn any_zero(&self) -> Vec<Vec<bool>> {
        self.support(|a| a == 0)
    }

    fn support(&self, pred: impl Fn(i64) -> bool) -> Vec<Vec<bool>> {
        let e = self.order();
        (0..e)
            .map(|i| {
                (0..e)
                    .map(|j| i != j && self.rows[i].iter().any(|c| pred(c[j])))
                    .collect()
            })
            .collect()
    }

    /// The common zero configuration when every RF-matrix has the same one.
    pub fn shared_configuration(&self) -> Option<ZeroConfig> {
        let first = zero_configuration(&self.canonical());
        let consistent = self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .all(|c| (0..c.len()).all(|j| i == j || (c[j] == 0) == first.is_zero(i, j)))
        });
        consistent.then_some(first)
    }

    /// Expand into the full list of matrices, lexicographic by rows.
    pub fn matrices(&self, cap: usize) -> Result<Vec<RfMatrix>, RfError> {
        let total = self.matrix_count();
        if total > cap as u128 {
            return Err(RfError::CapExceeded { cap });
        }
        let e = self.order();
        let mut out = Vec::with_capacity(total as usize);
        let mut idx = vec![0usize; e];
        if total == 0 {
            return Ok(out);
        }
        loop {
            out.push(RfMatrix {
                target: self.target,
                entries: (0..e).map(|i| self.rows[i][idx[i]].clone()).collect(),
            });
            let mut k = e;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < self.rows[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// Every RF-matrix of the pseudo-Frobenius number `f`.
pub fn rf_matrices(s: &NumericalSemigroup, f: i64, cap: usize) -> Result<Vec<RfMatrix>, RfError> {
    RowFactorizations::compute(s, f, cap)?.matrices(cap)
}

/// `lambda[i][j]` is the largest `k` with `k*g_j - g_i` outside the semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTable {
    lambda: Vec<Vec<i64>>,
    big_lambda: Vec<Vec<i64>>,
}

impl LambdaTable {
    pub fn order(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self, i: usize, j: usize) -> i64 {
        assert!(i != j);
        self.lambda[i][j]
    }

    /// `lambda(i, j) * g_j - g_i`.
    pub fn big_lambda(&self, i: usize, j: usize) -> i64 {
        assert!(i != j);
        self.big_lambda[i][j]
    }

    /// The multiset of all off-diagonal `big_lambda` values, sorted.
    pub fn multiset(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self
            .big_lambda
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(move |&(j, _)| j != i).map(|(_, &v)| v))
            .collect();
        all.sort_unstable();
        all
    }

    /// Off-diagonal positions holding the value 1.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        let e = self.order();
        (0..e)
            .flat_map(|i| (0..e).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.lambda[i][j] == 1)
            .collect()
    }
}

pub fn lambda_table(s: &NumericalSemigroup) -> LambdaTable {
    let g = s.generators();
    let e = g.len();
    let frob = s.frobenius();
    let mut lambda = vec![vec![0i64; e]; e];
    let mut big_lambda = vec![vec![0i64; e]; e];
    for i in 0..e {
        for j in (0..e).filter(|&j| j != i) {
            let mut k = (frob + g[i]).div_euclid(g[j]);
            while k > 0 && s.contains(k * g[j] - g[i]) {
                k -= 1;
            }
            lambda[i][j] = k;
            big_lambda[i][j] = k * g[j] - g[i];
        }
    }
    LambdaTable { lambda, big_lambda }
}

/// Generator indices `(i, j)` and `k >= 1` with `k*g_j - g_i = value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub k: i64,
    /// Either the good number itself or its partner `F - f`.
    pub value: i64,
}

impl Witness {
    pub fn render(&self, gens: &[i64]) -> String {
        format!("{}*{}-{}", self.k, gens[self.j], gens[self.i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodPf {
    pub value: i64,
    pub witness: Witness,
}

/// PF(S) split into the Frobenius number, good and bad values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfClassification {
    pub frobenius: i64,
    pub good: Vec<GoodPf>,
    pub bad: Vec<i64>,
    /// `(f, F - f)` with `f <= F - f`; `F/2` appears paired with itself.
    pub couples: Vec<(i64, i64)>,
}

impl PfClassification {
    pub fn good_values(&self) -> Vec<i64> {
        self.good.iter().map(|g| g.value).collect()
    }

    pub fn is_good(&self, f: i64) -> bool {
        self.good.iter().any(|g| g.value == f)
    }
}

fn find_witness(g: &[i64], x: i64) -> Option<Witness> {
    for (i, &gi) in g.iter().enumerate() {
        for (j, &gj) in g.iter().enumerate() {
            if i != j && (x + gi) % gj == 0 && (x + gi) / gj >= 1 {
                return Some(Witness {
                    i,
                    j,
                    k: (x + gi) / gj,
                    value: x,
                });
            }
        }
    }
    None
}

pub fn classify_pf(s: &NumericalSemigroup) -> Result<PfClassification, RfError> {
    if !s.is_almost_symmetric() {
        return Err(RfError::NotAlmostSymmetric);
    }
    Ok(classify_with_pf(s, &s.pseudo_frobenius()))
}

/// Classification from a precomputed PF list of an almost symmetric semigroup.
pub(crate) fn classify_with_pf(s: &NumericalSemigroup, pf: &[i64]) -> PfClassification {
    let g = s.generators();
    let frob = s.frobenius();
    let mut good = Vec::new();
    let mut bad = Vec::new();
    let mut couples = Vec::new();
    for &f in pf.iter().filter(|&&f| f != frob) {
        if f <= frob - f {
            couples.push((f, frob - f));
        }
        match find_witness(g, f).or_else(|| find_witness(g, frob - f)) {
            Some(witness) => good.push(GoodPf { value: f, witness }),
            None => bad.push(f),
        }
    }
    PfClassification {
        frobenius: frob,
        good,
        bad,
        couples,
    }
}

/// Zero counts and pairing properties for RF-matrices `A` of `f` and `B` of `F - f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairPropertyReport {
    /// Off-diagonal zeros of `A` plus those of `B`.
    pub zeros_total: usize,
    /// `a_ij * b_ji == 0` for all `i != j`.
    pub prop1_ok: bool,
    /// Exactly one of `a_ij`, `b_ji` is zero for all `i != j`.
    pub property_a_ok: bool,
    /// Every row and column of `A` and of `B` has exactly two positive
    /// off-diagonal entries and exactly two zeros.
    pub property_b_ok: bool,
}

fn two_and_two(m: &RfMatrix) -> bool {
    let e = m.order();
    let line_ok =
        |vals: Vec<i64>| vals.iter().filter(|&&a| a > 0).count() == 2 && vals.iter().filter(|&&a| a == 0).count() == 2;
    (0..e).all(|k| {
        let row = (0..e).filter(|&j| j != k).map(|j| m.get(k, j)).collect();
        let col = (0..e).filter(|&i| i != k).map(|i| m.get(i, k)).collect();
        line_ok(row) && line_ok(col)
    })
}

pub fn pair_report(a: &RfMatrix, b: &RfMatrix) -> Result<PairPropertyReport, RfError> {
    let e = a.order();
    if b.order() != e {
        return Err(RfError::OrderMismatch(e, b.order()));
    }
    let off = || {
        (0..e)
            .flat_map(|i| (0..e).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
    };
    let zeros_total =
        off().filter(|&(i, j)| a.get(i, j) == 0).count() + off().filter(|&(i, j)| b.get(i, j) == 0).count();
    let prop1_ok = off().all(|(i, j)| a.get(i, j) * b.get(j, i) == 0);
    let property_a_ok = off().all(|(i, j)| (a.get(i, j) == 0) != (b.get(j, i) == 0));
    let property_b_ok = two_and_two(a) && two_and_two(b);
    Ok(PairPropertyReport {
        zeros_total,
        prop1_ok,
        property_a_ok,
        property_b_ok,
    })
}

pub fn zero_configuration(a: &RfMatrix) -> ZeroConfig {
    ZeroConfig::from_fn(a.order(), |i, j| a.get(i, j) == 0)
}

pub fn shared_positive_rows(a: &RfMatrix) -> Option<SharedRows> {
    zero_configuration(a).shared_positive_rows()
}

/// Group bad values by the configuration of their canonical RF-matrix.
pub fn configurations_by_value(
    s: &NumericalSemigroup,
    bad: &[i64],
    cap: usize,
) -> Result<BTreeMap<ZeroConfig, Vec<i64>>, RfError> {
    let mut out: BTreeMap<ZeroConfig, Vec<i64>> = BTreeMap::new();
    for &f in bad {
        let rows = RowFactorizations::compute_unchecked(s, f, cap)?;
        out.entry(zero_configuration(&rows.canonical())).or_default().push(f);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn matrix_327() -> Vec<Vec<i64>> {
        crate::golden::matrix_327()
    }

    /// Every coefficient vector with c_j <= v / g_j, filtered by the sum.
    fn brute_factorizations(g: &[i64], v: i64, excluded: Option<usize>) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for (j, &gj) in g.iter().enumerate() {
            let max = if Some(j) == excluded { 0 } else { v / gj };
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (0..=max).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out.retain(|c| c.iter().zip(g).map(|(a, b)| a * b).sum::<i64>() == v);
        out.sort();
        out
    }

    #[test]
    fn factorization_examples() {
        let s = sg(&[5, 12, 13]);
        assert_eq!(factorizations(&s, 24, None, DEFAULT_CAP).unwrap(), vec![vec![0, 2, 0]]);
        assert_eq!(factorizations(&s, 0, None, DEFAULT_CAP).unwrap(), vec![vec![0, 0, 0]]);
        assert!(factorizations(&sg(&[2, 3]), 1, None, DEFAULT_CAP).unwrap().is_empty());
    }

    #[test]
    fn factorizations_match_brute_force() {
        for (gens, limit) in [
            (vec![5, 12, 13], 400),
            (vec![3, 4, 5], 150),
            (vec![6, 7, 8, 9, 10], 90),
            (vec![64, 67, 91, 138, 150], 900),
        ] {
            let s = sg(&gens);
            for v in (0..limit).step_by(7) {
                for excluded in [None, Some(0), Some(gens.len() - 1)] {
                    assert_eq!(
                        factorizations(&s, v, excluded, DEFAULT_CAP).unwrap(),
                        brute_factorizations(&gens, v, excluded),
                        "{gens:?} v={v} excluded={excluded:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn cap_is_an_error() {
        let s = sg(&[2, 3]);
        let all = factorizations(&s, 30, None, DEFAULT_CAP).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(factorizations(&s, 30, None, 6).unwrap().len(), 6);
        assert_eq!(factorizations(&s, 30, None, 5), Err(RfError::CapExceeded { cap: 5 }));
    }

    #[test]
    fn rf_examples() {
        let s = sg(&[5, 12, 13]);
        let ms = rf_matrices(&s, 19, DEFAULT_CAP).unwrap();
        assert!(ms
            .iter()
            .any(|m| m.entries() == [vec![-1, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]));

        let ms = rf_matrices(&sg(&[2, 3]), 1, DEFAULT_CAP).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].entries(), [vec![-1, 1], vec![2, -1]]);

        let s = sg(&[64, 67, 91, 138, 150]);
        let ms = rf_matrices(&s, 327, DEFAULT_CAP).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].entries(), matrix_327());
        let err = RfMatrix::new(&s, 327, crate::golden::published_matrix_327()).unwrap_err();
        assert_eq!(err, RfError::Invalid("row 2 sums to 477, not 327".into()));

        assert_eq!(rf_matrices(&s, 328, DEFAULT_CAP), Err(RfError::NotPseudoFrobenius(328)));
        assert_eq!(rf_matrices(&s, 327, 0), Err(RfError::CapExceeded { cap: 0 }));
    }

    #[test]
    fn rf_matrix_validation() {
        let s = sg(&[5, 12, 13]);
        assert!(RfMatrix::new(&s, 19, vec![vec![-1, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]).is_ok());
        assert!(RfMatrix::new(&s, 19, vec![vec![0, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]).is_err());
        assert!(RfMatrix::new(&s, 20, vec![vec![-1, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]).is_err());
        assert!(RfMatrix::new(&s, 19, vec![vec![-1, 2], vec![1, -1]]).is_err());
    }

    #[test]
    fn display_is_row_per_line() {
        let s = sg(&[2, 3]);
        let m = &rf_matrices(&s, 1, 10).unwrap()[0];
        assert_eq!(m.to_string(), "-1 1\n2 -1\n");
    }

    #[test]
    fn lambda_examples() {
        let t = lambda_table(&sg(&[5, 12, 13]));
        assert_eq!(t.lambda(0, 1), 2);
        assert_eq!(t.big_lambda(0, 1), 19);

        let t = lambda_table(&sg(&[64, 67, 91, 138, 150]));
        assert_eq!(t.lambda(0, 2), 3);
        assert_eq!(t.big_lambda(0, 2), 209);
        assert_eq!(t.multiset().len(), 20);

        let t = lambda_table(&sg(&[2, 3]));
        assert_eq!(t.lambda(0, 1), 1);
        assert_eq!(t.ones(), vec![(0, 1)]);
    }

    #[test]
    fn lambda_matches_linear_scan() {
        for gens in [vec![5, 12, 13], vec![7, 9, 11, 13], vec![64, 67, 91, 138, 150]] {
            let s = sg(&gens);
            let t = lambda_table(&s);
            for i in 0..gens.len() {
                for j in (0..gens.len()).filter(|&j| j != i) {
                    let scan = (0..=(s.frobenius() + gens[i]) / gens[j] + 2)
                        .filter(|&k| !s.contains(k * gens[j] - gens[i]))
                        .max()
                        .unwrap();
                    assert_eq!(t.lambda(i, j), scan);
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        let c = classify_pf(&sg(&[64, 67, 91, 138, 150])).unwrap();
        assert_eq!(c.good_values(), vec![209, 445]);
        assert_eq!(c.bad, vec![327]);
        assert_eq!(c.couples, vec![(209, 445), (327, 327)]);
        let w = c.good[0].witness;
        assert_eq!(w.render(&[64, 67, 91, 138, 150]), "3*91-64");

        let c = classify_pf(&sg(&[4, 6, 9])).unwrap();
        assert!(c.good.is_empty() && c.bad.is_empty());

        // PF = {1, 2} with F = 2, so only 1 is classified.
        let c = classify_pf(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(c.good_values(), vec![1]);
        assert!(c.bad.is_empty());
        assert_eq!(c.good.len() + c.bad.len() + 1, 2);

        assert_eq!(classify_pf(&sg(&[5, 12, 13])), Err(RfError::NotAlmostSymmetric));
    }

    #[test]
    fn pair_report_examples() {
        let s = sg(&[64, 67, 91, 138, 150]);
        let a = RfMatrix::new(&s, 327, matrix_327()).unwrap();
        let r = pair_report(&a, &a).unwrap();
        assert!(r.prop1_ok && r.property_a_ok && r.property_b_ok);
        assert_eq!(r.zeros_total, 20);

        let s = sg(&[5, 12, 13]);
        let a = RfMatrix::new(&s, 19, vec![vec![-1, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]).unwrap();
        assert!(!pair_report(&a, &a).unwrap().prop1_ok);

        let b = &rf_matrices(&sg(&[2, 3]), 1, 10).unwrap()[0];
        assert_eq!(pair_report(&a, b), Err(RfError::OrderMismatch(3, 2)));
    }

    #[test]
    fn zero_configuration_of_327() {
        let s = sg(&[64, 67, 91, 138, 150]);
        let a = RfMatrix::new(&s, 327, matrix_327()).unwrap();
        let c = zero_configuration(&a);
        let expected = [
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 5),
            (3, 1),
            (3, 4),
            (4, 2),
            (4, 5),
            (5, 1),
            (5, 3),
        ];
        for i in 0..5 {
            for j in (0..5).filter(|&j| j != i) {
                assert_eq!(c.is_zero(i, j), expected.contains(&(i + 1, j + 1)));
            }
        }
        let w = shared_positive_rows(&a).unwrap();
        let common = (0..5)
            .filter(|&k| k != w.first_row && k != w.second_row)
            .filter(|&k| a.get(w.first_row, k) > 0 && a.get(w.second_row, k) > 0)
            .count();
        assert_eq!(common, 1);
        assert!(a.get(w.first_row, w.column) > 0 && a.get(w.second_row, w.column) > 0);
    }

    #[test]
    fn all_positive_matrix_has_empty_mask() {
        let s = sg(&[5, 12, 13]);
        let a = RfMatrix::new(&s, 19, vec![vec![-1, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]).unwrap();
        assert_eq!(zero_configuration(&a).mask(), 1 << 1);
        let b = rf_matrices(&sg(&[2, 3]), 1, 10).unwrap();
        assert_eq!(zero_configuration(&b[0]).mask(), 0);
    }

    #[test]
    fn row_supports_agree_with_expansion() {
        let s = sg(&[64, 67, 91, 138, 150]);
        for f in s.pseudo_frobenius() {
            let rows = RowFactorizations::compute(&s, f, DEFAULT_CAP).unwrap();
            let all = rows.matrices(DEFAULT_CAP).unwrap();
            assert_eq!(all.len() as u128, rows.matrix_count());
            let pos = rows.any_positive();
            let zero = rows.any_zero();
            for i in 0..5 {
                for j in (0..5).filter(|&j| j != i) {
                    assert_eq!(pos[i][j], all.iter().any(|m| m.get(i, j) > 0));
                    assert_eq!(zero[i][j], all.iter().any(|m| m.get(i, j) == 0));
                }
            }
            let shared = all.iter().all(|m| zero_configuration(m) == zero_configuration(&all[0]));
            assert_eq!(rows.shared_configuration().is_some(), shared);
        }
    }
}
