//! Brute-force ground truth for every other module.
//!
//! Symmetric-group characters come from the Murnaghan–Nakayama rule, Kronecker
//! coefficients from the class-weighted triple character sum
//! `g = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`, Kostka numbers from chains of
//! horizontal strips and Littlewood–Richardson coefficients from LR tableaux.
//! None of these touch the lattice-point formulas they are used to check.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, KronTriple, Partition};
use crate::poly::Rational;
use crate::Coeff;

/// Default largest weight `n` for which the oracle works in `S_n`.
pub const DEFAULT_MAX_WEIGHT: u64 = 14;

/// A conjugacy class of `S_n`, identified by its cycle type `ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    /// `1 / z_ρ`, the class size divided by `n!`.
    pub class_size_factor: Rational,
}

/// `z_ρ = ∏ i^{m_i} m_i!`, the centralizer order of a permutation of cycle type `ρ`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let parts = rho.parts();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        let mut m = 0u64;
        while i < parts.len() && parts[i] == p {
            m += 1;
            i += 1;
            z *= BigInt::from(p) * BigInt::from(m);
        }
    }
    z
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The partitions of `n` together with the bookkeeping the character
/// recursion needs.
struct ClassTable {
    classes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// Index of `ρ` with its first part removed, in the table of `n − ρ₁`.
    tail: Vec<usize>,
    /// `n! / z_ρ`.
    size: Vec<BigInt>,
    factorial: BigInt,
}

/// Character and coefficient oracle with memoized character rows.
///
/// The caches sit behind read/write locks, so one instance can be shared by
/// worker threads. Results never depend on which thread filled a cache entry.
pub struct Oracle {
    max_weight: u64,
    tables: RwLock<HashMap<u64, Arc<ClassTable>>>,
    rows: RwLock<HashMap<Partition, Arc<Vec<i64>>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_WEIGHT)
    }
}

impl Oracle {
    pub fn new(max_weight: u64) -> Self {
        Oracle {
            max_weight,
            tables: RwLock::new(HashMap::new()),
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    fn check_weight(&self, n: u64) -> Result<()> {
        if n > self.max_weight {
            return Err(Error::OracleOverflow {
                weight: n,
                max: self.max_weight,
            });
        }
        Ok(())
    }

    fn table(&self, n: u64) -> Arc<ClassTable> {
        if let Some(t) = self.tables.read().get(&n) {
            return t.clone();
        }
        // Tails index into smaller tables; build those first.
        let smaller: Vec<_> = (0..n).map(|m| self.table(m)).collect();
        let classes = partitions_of(n);
        let index: HashMap<_, _> = classes
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let tail = classes
            .iter()
            .map(|rho| {
                if rho.is_empty() {
                    return 0;
                }
                let rest = rho.tail();
                smaller[rest.weight() as usize].index[&rest]
            })
            .collect();
        let factorial = factorial(n);
        let size = classes
            .iter()
            .map(|rho| &factorial / centralizer_order(rho))
            .collect();
        let table = Arc::new(ClassTable {
            classes,
            index,
            tail,
            size,
            factorial,
        });
        self.tables.write().entry(n).or_insert(table).clone()
    }

    /// The conjugacy classes of `S_n` with their weights `1/z_ρ`.
    pub fn conjugacy_classes(&self, n: u64) -> Result<Vec<ConjugacyClass>> {
        self.check_weight(n)?;
        Ok(self
            .table(n)
            .classes
            .iter()
            .map(|rho| ConjugacyClass {
                cycle_type: rho.clone(),
                class_size_factor: Rational::new(BigInt::one(), centralizer_order(rho)),
            })
            .collect())
    }

    /// All character values `χ^λ(ρ)`, `ρ` running over the partitions of `|λ|`
    /// in the order of [`partitions_of`].
    fn row(&self, lambda: &Partition) -> Result<Arc<Vec<i64>>> {
        if let Some(r) = self.rows.read().get(lambda) {
            return Ok(r.clone());
        }
        let w = lambda.weight();
        let table = self.table(w);
        let row = if w == 0 {
            vec![1]
        } else {
            // Hooks of each length r, with their signs and the rows of what remains.
            let mut by_length: Vec<Vec<(i64, Arc<Vec<i64>>)>> = vec![Vec::new(); w as usize + 1];
            for r in 1..=w {
                for (sign, rest) in remove_rim_hooks(lambda, r) {
                    by_length[r as usize].push((sign, self.row(&rest)?));
                }
            }
            let mut row = Vec::with_capacity(table.classes.len());
            for (j, rho) in table.classes.iter().enumerate() {
                let r = rho.part(1) as usize;
                let t = table.tail[j];
                let mut acc: i64 = 0;
                for (sign, sub) in &by_length[r] {
                    acc = acc
                        .checked_add(sign * sub[t])
                        .ok_or(Error::Overflow("character value"))?;
                }
                row.push(acc);
            }
            row
        };
        let row = Arc::new(row);
        Ok(self
            .rows
            .write()
            .entry(lambda.clone())
            .or_insert(row)
            .clone())
    }

    /// `χ^λ(ρ)` by border-strip removal.
    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.weight() != rho.weight() {
            return Err(Error::WeightMismatch(format!(
                "|lambda| = {} but |rho| = {} (lambda = {lambda}, rho = {rho})",
                lambda.weight(),
                rho.weight()
            )));
        }
        self.check_weight(lambda.weight())?;
        let table = self.table(lambda.weight());
        Ok(self.row(lambda)?[table.index[rho]])
    }

    /// `Σ_ρ χ^a(ρ) χ^b(ρ) / z_ρ` over `ρ ⊢ n`; equals `[a = b]` for partitions of `n`.
    pub fn inner_product(&self, a: &Partition, b: &Partition) -> Result<Rational> {
        let n = a.weight();
        if b.weight() != n {
            return Err(Error::WeightMismatch(format!("|{a}| != |{b}|")));
        }
        self.check_weight(n)?;
        let table = self.table(n);
        let (ra, rb) = (self.row(a)?, self.row(b)?);
        let mut sum = BigInt::zero();
        for j in 0..table.classes.len() {
            sum += &table.size[j] * BigInt::from(ra[j]) * BigInt::from(rb[j]);
        }
        Ok(Rational::new(sum, table.factorial.clone()))
    }

    /// `g_{μ,ν}^λ = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`.
    pub fn kron(&self, t: &KronTriple) -> Result<Coeff> {
        let n = t.weight();
        self.check_weight(n)?;
        let table = self.table(n);
        let (rl, rm, rn) = (self.row(&t.lambda)?, self.row(&t.mu)?, self.row(&t.nu)?);
        let mut sum = BigInt::zero();
        for j in 0..table.classes.len() {
            let prod = (rl[j] as i128)
                .checked_mul(rm[j] as i128)
                .and_then(|p| p.checked_mul(rn[j] as i128));
            match prod {
                Some(p) => sum += &table.size[j] * BigInt::from(p),
                None => {
                    sum += &table.size[j]
                        * BigInt::from(rl[j])
                        * BigInt::from(rm[j])
                        * BigInt::from(rn[j])
                }
            }
        }
        let (g, rem) = sum.div_rem(&table.factorial);
        assert!(
            rem.is_zero(),
            "character sum for {t} is not divisible by {n}!"
        );
        assert!(!g.is_negative(), "character sum for {t} is negative");
        g.to_u128().ok_or(Error::Overflow("Kronecker coefficient"))
    }

    /// Dimension of the irreducible representation `V_λ(S_n)`.
    pub fn dimension(&self, lambda: &Partition) -> Result<i64> {
        let n = lambda.weight();
        let ones = Partition::rectangle(1, n as usize);
        self.character(lambda, &ones)
    }
}

/// All ways to remove a border strip of `r` cells from `λ`, as
/// `(sign, remaining shape)`; the sign is `(−1)^(height of the strip)`.
///
/// Works on the first-column hook lengths (beta numbers) `β_i = λ_i + ℓ − i`:
/// removing an `r`-strip moves one bead from `β` to the free position `β − r`,
/// and the height is the number of beads strictly between the two positions.
pub fn remove_rim_hooks(lambda: &Partition, r: u64) -> Vec<(i64, Partition)> {
    let len = lambda.length() as u64;
    let beta: Vec<u64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u64)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&c| target < c && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j as u64))
            .collect();
        out.push((
            sign,
            Partition::from_padded(parts).expect("beta set yields a partition"),
        ));
    }
    out
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
///
/// Peels off the cells holding the largest entry, which form a horizontal
/// strip of `μ_last` cells, and recurses.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<Coeff> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(format!(
            "|lambda| = {} but |mu| = {} (lambda = {lambda}, mu = {mu})",
            lambda.weight(),
            mu.weight()
        )));
    }

    fn strips(shape: &[u64], content: &[u64]) -> Coeff {
        let Some((&last, rest)) = content.split_last() else {
            return shape.iter().all(|&p| p == 0) as Coeff;
        };
        if rest.len() + 1 < shape.iter().filter(|&&p| p > 0).count() {
            // more rows than remaining entries: some column would repeat
            return 0;
        }
        let mut inner = shape.to_vec();
        let mut total = 0;
        // choose how many cells to take from each row, last row first
        fn choose(
            row: usize,
            left: u64,
            shape: &[u64],
            inner: &mut Vec<u64>,
            rest: &[u64],
            total: &mut Coeff,
        ) {
            if row == shape.len() {
                if left == 0 {
                    *total += strips(inner, rest);
                }
                return;
            }
            let floor = shape.get(row + 1).copied().unwrap_or(0);
            let max_take = (shape[row] - floor).min(left);
            for take in 0..=max_take {
                inner[row] = shape[row] - take;
                choose(row + 1, left - take, shape, inner, rest, total);
            }
            inner[row] = shape[row];
        }
        choose(0, last, shape, &mut inner, rest, &mut total);
        total
    }

    Ok(strips(lambda.parts(), mu.parts()))
}

/// Number of Littlewood–Richardson tableaux of shape `λ/μ` and content `ν`:
/// rows weakly increasing, columns strictly increasing, and the reverse
/// reading word (rows top to bottom, each right to left) a lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Coeff> {
    if lambda.weight() != mu.weight() + nu.weight() {
        return Err(Error::WeightMismatch(format!(
            "|lambda| = {} but |mu| + |nu| = {} (lambda = {lambda}, mu = {mu}, nu = {nu})",
            lambda.weight(),
            mu.weight() + nu.weight()
        )));
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(0);
    }
    let rows = lambda.length();
    let inner: Vec<usize> = (1..=rows).map(|i| mu.part(i) as usize).collect();
    let outer: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (inner[i]..outer[i]).rev().map(move |j| (i, j)))
        .collect();
    let content: Vec<u64> = nu.parts().to_vec();

    struct Search<'a> {
        cells: &'a [(usize, usize)],
        inner: &'a [usize],
        outer: &'a [usize],
        content: &'a [u64],
        tab: Vec<Vec<usize>>,
        used: Vec<u64>,
        count: Coeff,
    }

    impl Search<'_> {
        fn go(&mut self, k: usize) {
            if k == self.cells.len() {
                self.count += 1;
                return;
            }
            let (i, j) = self.cells[k];
            let hi = if j + 1 < self.outer[i] {
                self.tab[i][j + 1]
            } else {
                self.content.len()
            };
            let lo = if i > 0 && j >= self.inner[i - 1] && j < self.outer[i - 1] {
                self.tab[i - 1][j] + 1
            } else {
                1
            };
            for v in lo..=hi.min(i + 1) {
                let e = v - 1;
                if self.used[e] == self.content[e] {
                    continue;
                }
                if e > 0 && self.used[e] + 1 > self.used[e - 1] {
                    continue;
                }
                self.used[e] += 1;
                self.tab[i][j] = v;
                self.go(k + 1);
                self.used[e] -= 1;
            }
        }
    }

    let mut search = Search {
        cells: &cells,
        inner: &inner,
        outer: &outer,
        content: &content,
        tab: outer.iter().map(|&w| vec![0; w]).collect(),
        used: vec![0; content.len()],
        count: 0,
    };
    search.go(0);
    Ok(search.count)
}

/// Checks `c_{μ,ν}^λ > 0 ⇔ c_{Nμ,Nν}^{Nλ} > 0` for every `N ≤ n_max`.
pub fn lr_saturation_check(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n_max: u64,
) -> Result<bool> {
    let positive = lr_coeff(lambda, mu, nu)? > 0;
    for n in 1..=n_max {
        let c = lr_coeff(&lambda.stretch(n)?, &mu.stretch(n)?, &nu.stretch(n)?)?;
        if (c > 0) != positive {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn rim_hooks_of_small_shapes() {
        // (2,1) has one 3-hook (the whole shape, height 1) and two 1-hooks
        let hooks = remove_rim_hooks(&partition![2, 1], 3);
        assert_eq!(hooks, vec![(-1, Partition::empty())]);
        let mut ones = remove_rim_hooks(&partition![2, 1], 1);
        ones.sort();
        assert_eq!(ones, vec![(1, partition![1, 1]), (1, partition![2])]);
        assert_eq!(
            remove_rim_hooks(&partition![2, 2], 3),
            vec![(-1, partition![1])]
        );
        assert!(remove_rim_hooks(&partition![2, 2], 4).is_empty());
    }

    #[test]
    fn trivial_and_sign_characters() {
        let o = Oracle::default();
        for n in 1..=7u64 {
            for rho in partitions_of(n) {
                assert_eq!(o.character(&Partition::row(n), &rho).unwrap(), 1);
                let sign = if (n - rho.length() as u64) % 2 == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(
                    o.character(&Partition::rectangle(1, n as usize), &rho)
                        .unwrap(),
                    sign
                );
            }
        }
        assert_eq!(
            o.character(&partition![2, 1], &partition![1, 1, 1])
                .unwrap(),
            2
        );
        assert_eq!(o.character(&partition![2, 1], &partition![3]).unwrap(), -1);
        assert_eq!(
            o.character(&partition![2, 1], &partition![2, 1]).unwrap(),
            0
        );
    }

    #[test]
    fn character_weight_mismatch() {
        let o = Oracle::default();
        assert!(matches!(
            o.character(&partition![2, 1], &partition![2]),
            Err(Error::WeightMismatch(_))
        ));
    }

    #[test]
    fn class_sizes_sum_to_one() {
        let o = Oracle::default();
        for n in 0..=10 {
            let total: Rational = o
                .conjugacy_classes(n)
                .unwrap()
                .into_iter()
                .map(|c| c.class_size_factor)
                .sum();
            assert!(total.is_one(), "n = {n}");
        }
    }

    #[test]
    fn dimensions_square_sum_to_factorial() {
        let o = Oracle::default();
        for n in 1..=9u64 {
            let sum: BigInt = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = BigInt::from(o.dimension(l).unwrap());
                    &d * &d
                })
                .sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn kron_examples() {
        let o = Oracle::default();
        let t = KronTriple::new(partition![2, 1], partition![2, 1], partition![2, 1]).unwrap();
        assert_eq!(o.kron(&t).unwrap(), 1);
        let t = KronTriple::new(partition![2, 2], partition![2, 2], partition![2, 2]).unwrap();
        assert_eq!(o.kron(&t).unwrap(), 1);
        for mu in partitions_of(6) {
            for nu in partitions_of(6) {
                let t = KronTriple::new(partition![6], mu.clone(), nu.clone()).unwrap();
                assert_eq!(o.kron(&t).unwrap(), (mu == nu) as Coeff);
            }
        }
    }

    #[test]
    fn oracle_respects_max_weight() {
        let o = Oracle::new(5);
        let t = KronTriple::new(partition![6], partition![6], partition![6]).unwrap();
        assert_eq!(o.kron(&t), Err(Error::OracleOverflow { weight: 6, max: 5 }));
    }

    #[test]
    fn kostka_examples() {
        for l in partitions_of(6) {
            assert_eq!(kostka(&l, &l).unwrap(), 1);
        }
        assert_eq!(kostka(&partition![2, 1], &partition![1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&partition![2], &partition![1, 1]).unwrap(), 1);
        assert_eq!(kostka(&partition![1, 1], &partition![2]).unwrap(), 0);
        assert!(kostka(&partition![2], &partition![1]).is_err());
    }

    #[test]
    fn kostka_with_standard_content_counts_standard_tableaux() {
        let o = Oracle::default();
        for n in 1..=8u64 {
            let ones = Partition::rectangle(1, n as usize);
            for l in partitions_of(n) {
                assert_eq!(kostka(&l, &ones).unwrap() as i64, o.dimension(&l).unwrap());
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(
            lr_coeff(&partition![2], &partition![1], &partition![1]).unwrap(),
            1
        );
        assert_eq!(
            lr_coeff(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]).unwrap(),
            2
        );
        for l in partitions_of(5) {
            for m in partitions_of(5) {
                assert_eq!(
                    lr_coeff(&l, &m, &Partition::empty()).unwrap(),
                    (l == m) as Coeff
                );
            }
        }
        assert!(lr_coeff(&partition![3], &partition![1], &partition![1]).is_err());
    }

    #[test]
    fn lr_pieri_rule() {
        // c_{μ,(r)}^λ = 1 exactly when λ/μ is a horizontal strip
        for w in 1..=7u64 {
            for l in partitions_of(w) {
                for r in 0..=w {
                    for m in partitions_of(w - r) {
                        let strip =
                            l.contains(&m) && (1..=l.length()).all(|i| m.part(i) >= l.part(i + 1));
                        assert_eq!(
                            lr_coeff(&l, &m, &Partition::row(r)).unwrap(),
                            strip as Coeff,
                            "{l} / {m}, r = {r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lr_symmetric_in_mu_nu() {
        for w in 1..=7u64 {
            for l in partitions_of(w) {
                for a in 0..=w {
                    for m in partitions_of(a) {
                        for n in partitions_of(w - a) {
                            assert_eq!(
                                lr_coeff(&l, &m, &n).unwrap(),
                                lr_coeff(&l, &n, &m).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_saturation_examples() {
        assert!(lr_saturation_check(&partition![2], &partition![1], &partition![1], 5).unwrap());
        assert!(lr_saturation_check(
            &partition![3, 2, 1],
            &partition![2, 1],
            &partition![2, 1],
            4
        )
        .unwrap());
        assert!(
            lr_saturation_check(&partition![3, 1], &partition![2], &partition![1, 1], 4).unwrap()
        );
        // s_2 s_11 = s_31 + s_211
        assert_eq!(
            lr_coeff(&partition![2, 2], &partition![2], &partition![1, 1]).unwrap(),
            0
        );
        assert_eq!(
            lr_coeff(&partition![2, 1, 1], &partition![2], &partition![1, 1]).unwrap(),
            1
        );
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order(&partition![1, 1, 1]), BigInt::from(6));
        assert_eq!(centralizer_order(&partition![2, 2]), BigInt::from(8));
        assert_eq!(centralizer_order(&partition![3, 2, 1]), BigInt::from(6));
        assert_eq!(centralizer_order(&Partition::empty()), BigInt::one());
    }
}
