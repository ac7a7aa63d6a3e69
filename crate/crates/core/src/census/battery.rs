//! Per-semigroup statistics and the property checks run on every census record.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rfmatrix::{classify_with_pf, lambda_table, RfError, RowFactorizations};
use crate::semigroup::NumericalSemigroup;

/// Upper bound on the type of an almost symmetric semigroup with five generators.
pub const TYPE_BOUND_E5: usize = 2 * 216 + 41;
/// Upper bound on the number of good pseudo-Frobenius numbers with five generators.
pub const GOOD_BOUND_E5: usize = 40;

/// One line of the census JSONL output.
///
/// For semigroups that are not almost symmetric the good/bad fields are
/// empty and `bad_is_half_frobenius` is vacuously true.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub gens: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub pf: Vec<i64>,
    pub almost_symmetric: bool,
    pub n_good: usize,
    pub n_bad: usize,
    pub bad_values: Vec<i64>,
    pub bad_is_half_frobenius: bool,
    pub bad_config_ids: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub gens: Vec<i64>,
    pub property: String,
}

#[derive(Debug, Default)]
pub(crate) struct Analysis {
    pub almost_symmetric: bool,
    pub record: Option<CensusRecord>,
    pub violations: Vec<Violation>,
    pub lambda_one: bool,
}

pub(crate) fn analyze(s: &NumericalSemigroup, require_almost_symmetric: bool, rf_cap: usize) -> Analysis {
    let gens = s.generators().to_vec();
    let e = gens.len();
    let frob = s.frobenius();
    let pf = s.pseudo_frobenius();
    let t = pf.len();
    let genus = s.genus();
    let mut out = Analysis::default();
    let violate = |out: &mut Analysis, property: &str| {
        out.violations.push(Violation {
            gens: gens.clone(),
            property: property.to_string(),
        })
    };

    // Almost symmetric iff 2g = F + t.
    let by_genus = 2 * genus == frob + t as i64;
    if require_almost_symmetric && !by_genus {
        return out;
    }
    let almost_symmetric = s.is_almost_symmetric();
    if almost_symmetric != by_genus {
        violate(&mut out, "almost-symmetric-criterion");
    }
    if e == 3 && t > 2 {
        violate(&mut out, "embdim3-type-2");
    }
    if !almost_symmetric {
        if !require_almost_symmetric {
            out.record = Some(CensusRecord {
                gens: gens.clone(),
                frobenius: frob,
                genus,
                semigroup_type: t,
                pf,
                almost_symmetric: false,
                n_good: 0,
                n_bad: 0,
                bad_values: vec![],
                bad_is_half_frobenius: true,
                bad_config_ids: vec![],
            });
        }
        return out;
    }
    out.almost_symmetric = true;

    let class = classify_with_pf(s, &pf);
    let lambda = lambda_table(s);
    if e == 4 && t > 3 {
        violate(&mut out, "embdim4-type-3");
    }
    if e == 5 {
        if t > TYPE_BOUND_E5 {
            violate(&mut out, "type-bound-473");
        }
        if class.good.len() > GOOD_BOUND_E5 {
            violate(&mut out, "good-bound-40");
        }
        out.lambda_one = !lambda.ones().is_empty();
    }
    if t != class.good.len() + class.bad.len() + 1 {
        violate(&mut out, "type-partition");
    }
    if class.good.iter().any(|g| !class.is_good(frob - g.value)) {
        violate(&mut out, "good-closed-under-complement");
    }
    let witnesses_ok = class.good.iter().all(|g| {
        let w = g.witness;
        w.k * gens[w.j] - gens[w.i] == w.value
            && (w.value == g.value || w.value == frob - g.value)
            && w.k == lambda.lambda(w.i, w.j)
    });
    if !witnesses_ok {
        violate(&mut out, "good-witness-lambda");
    }

    let mut bad_config_ids = Vec::new();
    let rf_result = check_rf_structure(s, &class.couples, &class.bad, rf_cap, &mut bad_config_ids, &mut |p| {
        violate(&mut out, p)
    });
    if let Err(RfError::CapExceeded { .. }) = rf_result {
        violate(&mut out, "cap-exceeded");
    }

    out.record = Some(CensusRecord {
        gens: gens.clone(),
        frobenius: frob,
        genus,
        semigroup_type: t,
        pf,
        almost_symmetric: true,
        n_good: class.good.len(),
        n_bad: class.bad.len(),
        bad_is_half_frobenius: class.bad.iter().all(|&b| 2 * b == frob),
        bad_values: class.bad,
        bad_config_ids,
    });
    out
}

/// Checks on all RF-matrix pairs, done row by row: an RF-matrix is any choice
/// of one factorization per row, so "for all pairs (A, B)" statements about
/// single entries reduce to which entries can be zero or positive.
fn check_rf_structure(
    s: &NumericalSemigroup,
    couples: &[(i64, i64)],
    bad: &[i64],
    cap: usize,
    bad_config_ids: &mut Vec<String>,
    violate: &mut dyn FnMut(&str),
) -> Result<(), RfError> {
    let e = s.embedding_dimension();
    let mut rows: BTreeMap<i64, RowFactorizations> = BTreeMap::new();
    for &(f, h) in couples {
        for x in [f, h] {
            if let std::collections::btree_map::Entry::Vacant(slot) = rows.entry(x) {
                slot.insert(RowFactorizations::compute_unchecked(s, x, cap)?);
            }
        }
    }
    let is_bad = |x: i64| bad.contains(&x);

    for &(f, h) in couples {
        let (a, b) = (&rows[&f], &rows[&h]);
        let (a_pos, b_pos) = (a.any_positive(), b.any_positive());
        let (a_zero, b_zero) = (a.any_zero(), b.any_zero());
        let off = (0..e)
            .flat_map(|i| (0..e).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j);
        if off.clone().any(|(i, j)| a_pos[i][j] && b_pos[j][i]) {
            violate("couple-product-zero");
        }
        if e == 5 && is_bad(f) {
            let exactly_one_zero = off.clone().all(|(i, j)| {
                let (a_all_zero, a_all_pos) = (!a_pos[i][j], !a_zero[i][j]);
                let (b_all_zero, b_all_pos) = (!b_pos[j][i], !b_zero[j][i]);
                (a_all_zero && b_all_pos) || (a_all_pos && b_all_zero)
            });
            if !exactly_one_zero {
                violate("property-a");
            }
        }
    }

    let mut by_config: BTreeMap<u128, usize> = BTreeMap::new();
    for &f in bad {
        let r = &rows[&f];
        let canonical = crate::rfmatrix::zero_configuration(&r.canonical());
        bad_config_ids.push(canonical.hex_id());
        if e != 5 {
            continue;
        }
        *by_config.entry(canonical.mask()).or_default() += 1;
        if r.shared_configuration().is_none() {
            violate("bad-config-not-unique");
        }
        if !canonical.is_admissible() {
            violate("property-b");
        }
        if canonical.shared_positive_rows().is_none() {
            violate("rows-witness");
        }
    }
    if by_config.values().any(|&c| c >= 3) {
        violate("config-shared-by-3");
    }
    Ok(())
}
