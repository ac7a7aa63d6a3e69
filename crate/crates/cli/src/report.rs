//! Text and JSON renderings shared by the subcommands.

use rfsemi::NumericalSemigroup;
use rfsemi::{PfClassification, RfMatrix, ZeroConfig};
use serde_json::{json, Value};

fn join(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn analyze_text(s: &NumericalSemigroup) -> String {
    let gp = s.gap_profile();
    let pf = s.pseudo_frobenius();
    format!(
        "generators: {}\nmultiplicity: {}\nembedding dimension: {}\nfrobenius: {}\ngenus: {}\nsmall elements: {}\npseudo-frobenius: {}\ntype: {}\nsymmetric: {}\nalmost symmetric: {}\n",
        join(s.generators()),
        s.multiplicity(),
        s.embedding_dimension(),
        s.frobenius(),
        gp.genus(),
        gp.n_small(),
        join(&pf),
        pf.len(),
        s.is_symmetric(),
        s.is_almost_symmetric(),
    )
}

pub fn analyze_json(s: &NumericalSemigroup) -> Value {
    let gp = s.gap_profile();
    let pf = s.pseudo_frobenius();
    json!({
        "generators": s.generators(),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": s.frobenius(),
        "genus": gp.genus(),
        "small_elements": gp.n_small(),
        "pf": pf,
        "type": pf.len(),
        "symmetric": s.is_symmetric(),
        "almost_symmetric": s.is_almost_symmetric(),
    })
}

pub fn classify_text(s: &NumericalSemigroup, c: &PfClassification) -> String {
    let mut out = String::new();
    for f in s.pseudo_frobenius() {
        if f == c.frobenius {
            out.push_str(&format!("{f} frobenius\n"));
        } else if let Some(g) = c.good.iter().find(|g| g.value == f) {
            out.push_str(&format!("{f} good {}\n", g.witness.render(s.generators())));
        } else {
            out.push_str(&format!("{f} bad\n"));
        }
    }
    out
}

pub fn classify_json(s: &NumericalSemigroup, c: &PfClassification) -> Value {
    let good: Vec<Value> = c
        .good
        .iter()
        .map(|g| {
            json!({
                "value": g.value,
                "witness": {
                    "i": g.witness.i,
                    "j": g.witness.j,
                    "k": g.witness.k,
                    "value": g.witness.value,
                    "expr": g.witness.render(s.generators()),
                }
            })
        })
        .collect();
    json!({
        "frobenius": c.frobenius,
        "good": good,
        "bad": c.bad,
        "couples": c.couples,
    })
}

pub fn matrices_text(ms: &[RfMatrix]) -> String {
    ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("\n")
}

pub fn config_text(c: &ZeroConfig) -> String {
    format!("{}\n{}", c.hex_id(), c.grid())
}
