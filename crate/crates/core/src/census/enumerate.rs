use crate::apery::ResidueTable;
use crate::semigroup::NumericalSemigroup;

/// The `(g1, g2)` prefixes a census over `embdim` generators bounded by
/// `max_gen` is split into, in lexicographic order.
///
/// Prefixes with no completion are still listed; they simply visit nothing.
pub fn partitions(embdim: usize, max_gen: i64) -> Vec<(i64, i64)> {
    let e = embdim as i64;
    let mut out = Vec::new();
    if embdim < 2 {
        return out;
    }
    for g1 in e..=max_gen {
        for g2 in g1 + 1..=max_gen - (e - 2) {
            if g2 % g1 != 0 {
                out.push((g1, g2));
            }
        }
    }
    out
}

/// Visit each numerical semigroup whose minimal generating set has exactly
/// `embdim` elements, all at most `max_gen`, in lexicographic order of the
/// generator tuple.
pub fn enumerate_minimal_tuples(embdim: usize, max_gen: i64, mut visit: impl FnMut(&NumericalSemigroup)) {
    if embdim == 0 {
        return;
    }
    if embdim == 1 {
        if max_gen >= 1 {
            visit(&NumericalSemigroup::from_parts(vec![1], vec![0]));
        }
        return;
    }
    for prefix in partitions(embdim, max_gen) {
        enumerate_partition(embdim, max_gen, prefix, &mut visit);
    }
}

/// Visit the semigroups of one `(g1, g2)` prefix in lexicographic order.
pub fn enumerate_partition(
    embdim: usize,
    max_gen: i64,
    (g1, g2): (i64, i64),
    visit: &mut impl FnMut(&NumericalSemigroup),
) {
    assert!(embdim >= 2);
    if g1 < embdim as i64 || g2 <= g1 || g2 > max_gen {
        return;
    }
    let mut table = ResidueTable::new(g1);
    if table.contains(g2) {
        return;
    }
    table.add_generator(g2).expect("census sizes cannot overflow");
    let mut gens = vec![g1, g2];
    extend(embdim, max_gen, &mut gens, &table, visit);
}

fn extend(
    embdim: usize,
    max_gen: i64,
    gens: &mut Vec<i64>,
    table: &ResidueTable,
    visit: &mut impl FnMut(&NumericalSemigroup),
) {
    if gens.len() == embdim {
        if table.is_complete() {
            let s = NumericalSemigroup::from_parts(gens.clone(), table.clone().into_inner());
            visit(&s);
        }
        return;
    }
    let left = (embdim - gens.len()) as i64;
    let last = *gens.last().unwrap();
    for g in last + 1..=max_gen - (left - 1) {
        if table.contains(g) {
            continue;
        }
        let mut next = table.clone();
        next.add_generator(g).expect("census sizes cannot overflow");
        gens.push(g);
        extend(embdim, max_gen, gens, &next, visit);
        gens.pop();
    }
}
