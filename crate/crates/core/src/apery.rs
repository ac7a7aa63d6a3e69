//! Shortest paths over residue classes modulo the multiplicity.
//!
//! Entry `r` of the table holds the least element of the (not necessarily
//! cofinite) monoid generated so far that is congruent to `r` modulo `m`.
//! Generators are added one at a time with a round-robin relaxation: for each
//! cycle of the map `r -> r + a (mod m)` we start at the cycle minimum, which
//! cannot improve, and walk the cycle once.

pub(crate) const UNREACHABLE: i64 = i64::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ResidueTable {
    modulus: i64,
    least: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ResidueTable {
    pub(crate) fn new(modulus: i64) -> Self {
        debug_assert!(modulus >= 1);
        let mut least = vec![UNREACHABLE; modulus as usize];
        least[0] = 0;
        ResidueTable { modulus, least }
    }

    #[inline]
    pub(crate) fn contains(&self, x: i64) -> bool {
        x >= 0 && self.least[(x % self.modulus) as usize] <= x
    }

    pub(crate) fn is_complete(&self) -> bool {
        self.least.iter().all(|&w| w != UNREACHABLE)
    }

    pub(crate) fn into_inner(self) -> Vec<i64> {
        self.least
    }

    pub(crate) fn add_generator(&mut self, a: i64) -> Result<(), Overflow> {
        let m = self.modulus;
        let step = (a % m) as usize;
        if step == 0 {
            return Ok(());
        }
        let m = m as usize;
        let cycles = gcd(m as i64, step as i64) as usize;
        let len = m / cycles;
        for start in 0..cycles {
            let mut r = start;
            let mut best = start;
            for _ in 0..len {
                if self.least[r] < self.least[best] {
                    best = r;
                }
                r = (r + step) % m;
            }
            if self.least[best] == UNREACHABLE {
                continue;
            }
            let mut r = best;
            for _ in 1..len {
                let next = (r + step) % m;
                let cand = self.least[r].checked_add(a).ok_or(Overflow)?;
                if cand < self.least[next] {
                    self.least[next] = cand;
                }
                r = next;
            }
        }
        Ok(())
    }
}
