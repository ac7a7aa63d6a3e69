//! Published reference values replayed against the library.

use std::time::Instant;

use crate::census::{census_in_memory, CensusParams};
use crate::configenum::count_configs;
use crate::rfmatrix::{classify_pf, lambda_table, pair_report, rf_matrices, zero_configuration, RfMatrix, DEFAULT_CAP};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

pub const E5_EXAMPLE: [i64; 5] = [64, 67, 91, 138, 150];
pub const E3_EXAMPLE: [i64; 3] = [5, 12, 13];
pub const E6_EXAMPLE: [i64; 6] = [455, 497, 574, 589, 631, 708];

pub const E6_PF: [i64; 14] = [
    3079, 3289, 3521, 3655, 3674, 3789, 3923, 4057, 4172, 4191, 4325, 4557, 4767, 7846,
];

/// The unique RF-matrix of 327 in [`E5_EXAMPLE`].
pub fn matrix_327() -> Vec<Vec<i64>> {
    let mut m = published_matrix_327();
    m[2][4] = 1;
    m
}

/// The matrix of 327 as published. Row 3 sums to 477: its last entry should be 1.
pub fn published_matrix_327() -> Vec<Vec<i64>> {
    vec![
        vec![-1, 0, 1, 0, 2],
        vec![4, -1, 0, 1, 0],
        vec![0, 4, -1, 0, 2],
        vec![3, 0, 3, -1, 0],
        vec![0, 3, 0, 2, -1],
    ]
}

pub fn matrix_19() -> Vec<Vec<i64>> {
    vec![vec![-1, 2, 0], vec![1, -1, 2], vec![4, 1, -1]]
}

/// The six-generator family `A_{3521 + 134 l}` for `l` in `0..=6`.
pub fn e6_family_matrix(l: i64) -> Vec<Vec<i64>> {
    vec![
        vec![-1, 8 - l, 0, 0, l, 0],
        vec![0, -1, 7 - l, 0, 0, l],
        vec![9 - l, 0, -1, l, 0, 0],
        vec![0, 7 - l, 0, -1, l + 1, 0],
        vec![0, 0, 6 - l, 0, -1, l + 1],
        vec![8 - l, 0, 0, l + 1, 0, -1],
    ]
}

/// `(n, r)` pairs for the four-generator family of unbounded type.
pub const LARGE_TYPE_FAMILY: [(i64, i64); 3] = [(2, 8), (3, 11), (4, 14)];

pub fn large_type_generators(n: i64, r: i64) -> [i64; 4] {
    let s = r * (3 * n + 2) + 3;
    [s, s + 3, s + 3 * n + 1, s + 3 * n + 2]
}

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).expect("reference generators are valid")
}

fn check(name: &str, body: impl FnOnce() -> Result<String, String>) -> GoldenCheck {
    let t = Instant::now();
    let (passed, detail) = match body() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    GoldenCheck {
        name: name.to_string(),
        passed,
        detail,
        seconds: t.elapsed().as_secs_f64(),
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

pub fn e5_pf_set() -> GoldenCheck {
    check("pf set of <64,67,91,138,150>", || {
        let s = sg(&E5_EXAMPLE);
        let pf = s.pseudo_frobenius();
        ensure(pf == [209, 327, 445, 654], format!("PF = {pf:?}"))?;
        ensure(s.frobenius() == 654, format!("F = {}", s.frobenius()))?;
        ensure(s.is_almost_symmetric(), "not almost symmetric")?;
        ensure(s.semigroup_type() == 4, "type != 4")?;
        Ok(format!("PF = {pf:?}, F = 654, type 4, almost symmetric"))
    })
}

pub fn e5_classification() -> GoldenCheck {
    check("good/bad split of <64,67,91,138,150>", || {
        let c = classify_pf(&sg(&E5_EXAMPLE)).map_err(|e| e.to_string())?;
        ensure(c.good_values() == [209, 445], format!("good = {:?}", c.good_values()))?;
        ensure(c.bad == [327], format!("bad = {:?}", c.bad))?;
        Ok("good {209, 445}, bad {327}".into())
    })
}

pub fn e5_rf_matrix() -> GoldenCheck {
    check("RF-matrix of 327 with properties (a), (b)", || {
        let s = sg(&E5_EXAMPLE);
        let all = rf_matrices(&s, 327, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(all.iter().any(|m| m.entries() == matrix_327()), "matrix not enumerated")?;
        let published = published_matrix_327();
        let differing: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (0..5).map(move |j| (i, j)))
            .filter(|&(i, j)| published[i][j] != matrix_327()[i][j])
            .collect();
        ensure(
            differing == [(2, 4)],
            format!("published matrix differs at {differing:?}"),
        )?;
        ensure(
            RfMatrix::new(&s, 327, published.clone()).is_err(),
            "published matrix validates",
        )?;
        let a = RfMatrix::new(&s, 327, matrix_327()).map_err(|e| e.to_string())?;
        ensure(
            zero_configuration(&a) == crate::configenum::ZeroConfig::from_fn(5, |i, j| published[i][j] == 0),
            "zero configuration differs from the published one",
        )?;
        let r = pair_report(&a, &a).map_err(|e| e.to_string())?;
        ensure(r.prop1_ok && r.property_a_ok && r.property_b_ok, format!("{r:?}"))?;
        ensure(r.zeros_total == 20, format!("zeros = {}", r.zeros_total))?;
        Ok(format!(
            "{} RF-matrix, same zeros as published (entry (3,5) published as 2, is 1), 20 zeros, (a) and (b) hold",
            all.len()
        ))
    })
}

pub fn e5_lambda() -> GoldenCheck {
    check("lambda entry 3*91-64 = 209", || {
        let s = sg(&E5_EXAMPLE);
        let t = lambda_table(&s);
        ensure(t.lambda(0, 2) == 3, format!("lambda = {}", t.lambda(0, 2)))?;
        ensure(t.big_lambda(0, 2) == 209, format!("Lambda = {}", t.big_lambda(0, 2)))?;
        ensure(t.multiset().len() == 20, "multiset size != 20")?;
        Ok("lambda = 3, Lambda = 209, |multiset| = 20".into())
    })
}

pub fn e3_rf_matrix() -> GoldenCheck {
    check("printed RF-matrix of 19 in <5,12,13>", || {
        let s = sg(&E3_EXAMPLE);
        let all = rf_matrices(&s, 19, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(
            all.iter().any(|m| m.entries() == matrix_19()),
            "printed matrix not enumerated",
        )?;
        Ok(format!("found among {} RF-matrices", all.len()))
    })
}

pub fn config_count() -> GoldenCheck {
    check("216 admissible 0-configurations, type bound 473", || {
        let n = count_configs(5).map_err(|e| e.to_string())?;
        ensure(n == 216, format!("count = {n}"))?;
        ensure(2 * n + 41 == 473, "bound arithmetic")?;
        Ok("N = 216, 2N + 41 = 473".into())
    })
}

pub fn e6_example() -> GoldenCheck {
    check("six generators with type 14", || {
        let s = sg(&E6_EXAMPLE);
        let pf = s.pseudo_frobenius();
        ensure(pf == E6_PF, format!("PF = {pf:?}"))?;
        ensure(pf.len() > 2 * s.embedding_dimension(), "type not above 2e")?;
        ensure(s.is_almost_symmetric(), "not almost symmetric")?;
        let progression: Vec<i64> = (0..7).map(|l| 3521 + 134 * l).collect();
        ensure(
            progression.iter().all(|x| pf.contains(x)) && progression[6] == 4325,
            "progression of ratio 134 missing",
        )?;
        Ok("14 PF numbers, progression 3521..=4325 step 134".into())
    })
}

pub fn e6_matrices() -> GoldenCheck {
    check("six-generator family matrices and shared configuration", || {
        let s = sg(&E6_EXAMPLE);
        let mut configs = Vec::new();
        for l in 0..=6 {
            let target = 3521 + 134 * l;
            let m = RfMatrix::new(&s, target, e6_family_matrix(l)).map_err(|e| format!("l = {l}: {e}"))?;
            ensure(s.pseudo_frobenius().contains(&target), format!("{target} not PF"))?;
            configs.push(zero_configuration(&m));
        }
        ensure(
            configs[1..=5].iter().all(|c| *c == configs[1]),
            "l = 1..5 do not share a configuration",
        )?;
        let classes = match classify_pf(&s) {
            Ok(c) => (1..=6)
                .map(|l| {
                    let f = 3521 + 134 * l;
                    format!("{f}:{}", if c.is_good(f) { "good" } else { "bad" })
                })
                .collect::<Vec<_>>()
                .join(" "),
            Err(e) => e.to_string(),
        };
        Ok(format!(
            "rows valid for l = 0..6, shared config {}; {classes}",
            configs[1].hex_id()
        ))
    })
}

pub fn large_type_family() -> GoldenCheck {
    check("four-generator family has type 3n+2", || {
        let mut seen = Vec::new();
        for (n, r) in LARGE_TYPE_FAMILY {
            let s = sg(&large_type_generators(n, r));
            let t = s.semigroup_type() as i64;
            ensure(t == 3 * n + 2, format!("{s}: type {t}, expected {}", 3 * n + 2))?;
            seen.push(format!("{s}:{t}"));
        }
        Ok(seen.join(" "))
    })
}

fn small_census(embdim: usize, max_gen: i64, almost_only: bool) -> Result<crate::census::CensusSummary, String> {
    let mut p = CensusParams::new(embdim, max_gen, "in-memory");
    p.require_almost_symmetric = almost_only;
    census_in_memory(&p).map(|(_, s)| s).map_err(|e| e.to_string())
}

pub fn census_embdim3() -> GoldenCheck {
    check("census e=3, g <= 40: type <= 2", || {
        let s = small_census(3, 40, false)?;
        ensure(
            s.max_type <= 2 && s.is_clean(),
            format!("max type {}, {} violations", s.max_type, s.violations.len()),
        )?;
        Ok(format!("{} semigroups, max type {}", s.semigroups_seen, s.max_type))
    })
}

pub fn census_embdim4() -> GoldenCheck {
    check("census e=4, g <= 40, almost symmetric: type <= 3", || {
        let s = small_census(4, 40, true)?;
        ensure(
            s.max_type <= 3 && s.is_clean(),
            format!("max type {}, {} violations", s.max_type, s.violations.len()),
        )?;
        Ok(format!(
            "{} almost symmetric, max type {}",
            s.records_emitted, s.max_type
        ))
    })
}

pub fn census_embdim5() -> GoldenCheck {
    check("census e=5, g <= 40, almost symmetric: type <= 5, bad = F/2", || {
        let s = small_census(5, 40, true)?;
        ensure(
            s.max_type <= 5 && s.max_n_bad <= 1 && s.records_bad_not_half == 0 && s.is_clean(),
            format!("{s:?}"),
        )?;
        Ok(format!(
            "{} almost symmetric, max type {}, {} with a bad PF",
            s.records_emitted, s.max_type, s.records_with_bad
        ))
    })
}

/// Every reference check, in a fixed order.
pub fn run_all() -> Vec<GoldenCheck> {
    vec![
        e5_pf_set(),
        e5_classification(),
        e5_rf_matrix(),
        e5_lambda(),
        e3_rf_matrix(),
        config_count(),
        e6_example(),
        e6_matrices(),
        large_type_family(),
        census_embdim3(),
        census_embdim4(),
        census_embdim5(),
    ]
}
