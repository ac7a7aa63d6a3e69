//! Zero/positive patterns of square matrices with a distinguished diagonal,
//! and enumeration of the admissible ones: exactly two positive off-diagonal
//! entries in every row and every column.

use std::fmt;

use thiserror::Error;

/// Largest order whose off-diagonal cells fit in the 128-bit mask.
pub const MAX_MASK_ORDER: usize = 11;

/// Orders accepted by [`enumerate_configs`] and [`count_configs`].
pub const MIN_ENUM_ORDER: usize = 3;
pub const MAX_ENUM_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("order {0} outside the supported range {MIN_ENUM_ORDER}..={MAX_ENUM_ORDER}")]
    OrderOutOfRange(usize),
}

/// Off-diagonal zero pattern of an order-`n` matrix.
///
/// Bit `k` of the mask corresponds to the `k`-th off-diagonal cell in
/// row-major order, skipping the diagonal; a set bit means the entry is zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroConfig {
    order: u8,
    mask: u128,
}

/// Two rows that are both positive in exactly one common column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SharedRows {
    pub first_row: usize,
    pub second_row: usize,
    pub column: usize,
}

#[inline]
fn bit_index(order: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j);
    i * (order - 1) + if j < i { j } else { j - 1 }
}

impl ZeroConfig {
    pub fn from_mask(order: usize, mask: u128) -> Self {
        assert!(order <= MAX_MASK_ORDER, "order {order} too large for a zero mask");
        let cells = order * order.saturating_sub(1);
        let valid = if cells == 128 { u128::MAX } else { (1u128 << cells) - 1 };
        assert!(mask & !valid == 0, "mask has bits outside the off-diagonal cells");
        ZeroConfig {
            order: order as u8,
            mask,
        }
    }

    /// Build from a predicate telling whether off-diagonal cell `(i, j)` is zero.
    pub fn from_fn(order: usize, mut is_zero: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(order <= MAX_MASK_ORDER, "order {order} too large for a zero mask");
        let mut mask = 0u128;
        for i in 0..order {
            for j in (0..order).filter(|&j| j != i) {
                if is_zero(i, j) {
                    mask |= 1 << bit_index(order, i, j);
                }
            }
        }
        ZeroConfig {
            order: order as u8,
            mask,
        }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn is_zero(&self, i: usize, j: usize) -> bool {
        self.mask >> bit_index(self.order(), i, j) & 1 == 1
    }

    pub fn is_positive(&self, i: usize, j: usize) -> bool {
        i != j && !self.is_zero(i, j)
    }

    pub fn zero_count(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Positive columns of row `i`.
    pub fn positives_in_row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&j| self.is_positive(i, j))
    }

    /// Positive rows of column `j`.
    pub fn positives_in_column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&i| self.is_positive(i, j))
    }

    /// Exactly two positive cells in every row and column.
    pub fn is_admissible(&self) -> bool {
        (0..self.order()).all(|k| self.positives_in_row(k).count() == 2 && self.positives_in_column(k).count() == 2)
    }

    /// Fixed-width lowercase hex of the mask; the width covers every
    /// off-diagonal bit, so IDs of one order sort like their masks.
    pub fn hex_id(&self) -> String {
        let cells = self.order() * self.order().saturating_sub(1);
        let width = cells.div_ceil(4).max(1);
        format!("{:0width$x}", self.mask)
    }

    /// Find rows `r1 < r2` and a column `j` where both rows are positive and
    /// no other column is positive in both.
    ///
    /// Returns `None` unless every row and column has exactly two positives.
    pub fn shared_positive_rows(&self) -> Option<SharedRows> {
        if !self.is_admissible() {
            return None;
        }
        for column in 0..self.order() {
            let rows: Vec<usize> = self.positives_in_column(column).collect();
            let (r1, r2) = (rows[0], rows[1]);
            let common = self.positives_in_row(r1).filter(|&k| self.is_positive(r2, k)).count();
            if common == 1 {
                return Some(SharedRows {
                    first_row: r1,
                    second_row: r2,
                    column,
                });
            }
        }
        None
    }

    /// Grid rendering: `-` diagonal, `0` zero, `+` positive.
    pub fn grid(&self) -> String {
        let n = self.order();
        let mut out = String::with_capacity(n * (2 * n));
        for i in 0..n {
            for j in 0..n {
                if j > 0 {
                    out.push(' ');
                }
                out.push(if i == j {
                    '-'
                } else if self.is_zero(i, j) {
                    '0'
                } else {
                    '+'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for ZeroConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hex_id())
    }
}

fn check_order(n: usize) -> Result<(), ConfigError> {
    if (MIN_ENUM_ORDER..=MAX_ENUM_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(ConfigError::OrderOutOfRange(n))
    }
}

/// Visit every admissible configuration of order `n` in ascending mask order.
///
/// Row `i` occupies a contiguous block of bits above the blocks of rows
/// `0..i`, so filling rows from last to first and trying each row's zero
/// pattern in ascending order yields ascending masks overall.
pub fn for_each_config(n: usize, mut visit: impl FnMut(ZeroConfig)) -> Result<(), ConfigError> {
    check_order(n)?;
    // Per row: (zero bits of the row, positive column pair), ascending by bits.
    let row_choices: Vec<Vec<(u128, [usize; 2])>> = (0..n)
        .map(|i| {
            let cols: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let all: u128 = cols.iter().map(|&j| 1u128 << bit_index(n, i, j)).sum();
            let mut choices = Vec::new();
            for a in 0..cols.len() {
                for b in a + 1..cols.len() {
                    let pos = (1u128 << bit_index(n, i, cols[a])) | (1u128 << bit_index(n, i, cols[b]));
                    choices.push((all & !pos, [cols[a], cols[b]]));
                }
            }
            choices.sort_unstable();
            choices
        })
        .collect();

    fn fill(
        row: usize,
        n: usize,
        mask: u128,
        col_load: &mut [u8],
        row_choices: &[Vec<(u128, [usize; 2])>],
        visit: &mut dyn FnMut(ZeroConfig),
    ) {
        let open = row as u8 + 1;
        if col_load.iter().any(|&c| c + open < 2) {
            return;
        }
        for &(bits, [a, b]) in &row_choices[row] {
            if col_load[a] == 2 || col_load[b] == 2 {
                continue;
            }
            col_load[a] += 1;
            col_load[b] += 1;
            let next = mask | bits;
            if row == 0 {
                if col_load.iter().all(|&c| c == 2) {
                    visit(ZeroConfig {
                        order: n as u8,
                        mask: next,
                    });
                }
            } else {
                fill(row - 1, n, next, col_load, row_choices, visit);
            }
            col_load[a] -= 1;
            col_load[b] -= 1;
        }
    }

    let mut col_load = vec![0u8; n];
    fill(n - 1, n, 0, &mut col_load, &row_choices, &mut visit);
    Ok(())
}

/// All admissible configurations of order `n`, ascending by mask.
pub fn enumerate_configs(n: usize) -> Result<Vec<ZeroConfig>, ConfigError> {
    let mut out = Vec::new();
    for_each_config(n, |c| out.push(c))?;
    Ok(out)
}

pub fn count_configs(n: usize) -> Result<u64, ConfigError> {
    let mut count = 0u64;
    for_each_config(n, |_| count += 1)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Filter every off-diagonal mask by the row/column rule.
    fn brute_force_count(n: usize) -> u64 {
        let cells = n * (n - 1);
        (0u128..1 << cells)
            .filter(|&m| ZeroConfig::from_mask(n, m).is_admissible())
            .count() as u64
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 3..=5 {
            assert_eq!(count_configs(n).unwrap(), brute_force_count(n), "order {n}");
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(count_configs(3).unwrap(), 1);
        assert_eq!(count_configs(4).unwrap(), 9);
        assert_eq!(count_configs(5).unwrap(), 216);
    }

    #[test]
    fn order_three_is_all_positive() {
        let all = enumerate_configs(3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].mask(), 0);
        assert_eq!(all[0].grid(), "- + +\n+ - +\n+ + -\n");
    }

    #[test]
    fn enumeration_is_sorted_unique_and_admissible() {
        for n in 3..=6 {
            let all = enumerate_configs(n).unwrap();
            assert!(all.windows(2).all(|w| w[0].mask() < w[1].mask()), "order {n}");
            assert!(all.iter().all(|c| c.is_admissible()));
        }
    }

    #[test]
    fn order_range_is_guarded() {
        assert_eq!(count_configs(2), Err(ConfigError::OrderOutOfRange(2)));
        assert_eq!(enumerate_configs(9), Err(ConfigError::OrderOutOfRange(9)));
    }

    #[test]
    fn bit_layout_is_row_major_off_diagonal() {
        let c = ZeroConfig::from_fn(3, |i, j| (i, j) == (1, 0));
        assert_eq!(c.mask(), 1 << 2);
        let c = ZeroConfig::from_fn(3, |i, j| (i, j) == (2, 1));
        assert_eq!(c.mask(), 1 << 5);
        assert_eq!(c.hex_id(), "20");
        assert_eq!(ZeroConfig::from_mask(5, 0x3).hex_id(), "00003");
    }

    #[test]
    fn every_order_five_config_has_a_shared_row_pair() {
        for c in enumerate_configs(5).unwrap() {
            let w = c.shared_positive_rows().expect("odd order always has one");
            assert!(c.is_positive(w.first_row, w.column));
            assert!(c.is_positive(w.second_row, w.column));
            let common = (0..5)
                .filter(|&k| c.is_positive(w.first_row, k) && c.is_positive(w.second_row, k))
                .count();
            assert_eq!(common, 1);
        }
    }

    #[test]
    fn shared_rows_absent_without_two_positives_per_line() {
        // Row 0 has three zeros.
        let c = ZeroConfig::from_fn(5, |i, _| i == 0);
        assert_eq!(c.shared_positive_rows(), None);
    }
}
