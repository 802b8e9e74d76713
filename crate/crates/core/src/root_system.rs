//! Cartan data, Weyl groups and extremal paths.
//!
//! Weights are stored in fundamental-weight coordinates, so the simple root
//! `α_c` is column `c` of the Cartan matrix and `s_i(λ) = λ - λ_i α_i`.
//! Nodes are numbered from 1 in every public type.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// Enumeration stops with an error beyond this many group elements.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanData {
    matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// `a_ij` for 1-based nodes.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    /// `d_i` for a 1-based node.
    pub fn symmetrizer(&self, i: usize) -> i64 {
        self.symmetrizers[i - 1]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank() {
            return Err(Error::UnknownNode {
                node,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// The simple root `α_c` in fundamental-weight coordinates.
    pub fn simple_root(&self, c: usize) -> Vec<i64> {
        self.matrix.iter().map(|row| row[c - 1]).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<i64> {
        (1..=self.rank()).map(|k| i64::from(k == i)).collect()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let l = self.rank();
        let mut m = identity(l);
        for (r, row) in m.iter_mut().enumerate() {
            row[i - 1] -= self.matrix[r][i - 1];
        }
        WeylElement(m)
    }

    /// Simple-root coordinates of a weight, `A^{-1} λ`.
    pub fn weight_to_root_coords(&self, weight: &[i64]) -> Vec<Rational> {
        let l = self.rank();
        let mut aug: Vec<Vec<Rational>> = (0..l)
            .map(|r| {
                let mut row: Vec<Rational> = self.matrix[r].iter().map(|&x| int(x)).collect();
                row.push(int(weight[r]));
                row
            })
            .collect();
        gauss_solve(&mut aug)
    }
}

pub fn validate_cartan(matrix: Vec<Vec<i64>>, symmetrizers: Vec<i64>) -> Result<CartanData> {
    let l = matrix.len();
    let bad = |msg: String| Err(Error::InvalidCartan(msg));
    if l == 0 {
        return bad("empty matrix".into());
    }
    if matrix.iter().any(|row| row.len() != l) {
        return bad("matrix is not square".into());
    }
    if symmetrizers.len() != l {
        return bad(format!(
            "expected {l} symmetrizers, got {}",
            symmetrizers.len()
        ));
    }
    if symmetrizers.iter().any(|&d| d <= 0) {
        return bad("symmetrizers must be positive".into());
    }
    if symmetrizers.iter().fold(0i64, |g, d| g.gcd(d)) != 1 {
        return bad("symmetrizers are not coprime".into());
    }
    for i in 0..l {
        if matrix[i][i] != 2 {
            return bad(format!("diagonal entry a_{0}{0} must be 2", i + 1));
        }
        for j in 0..l {
            if i == j {
                continue;
            }
            if matrix[i][j] > 0 {
                return bad(format!(
                    "off-diagonal entry a_{}{} is positive",
                    i + 1,
                    j + 1
                ));
            }
            if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                return bad(format!(
                    "a_{0}{1} and a_{1}{0} must vanish together",
                    i + 1,
                    j + 1
                ));
            }
            if symmetrizers[i] * matrix[i][j] != symmetrizers[j] * matrix[j][i] {
                return bad("DA is not symmetric".into());
            }
        }
    }
    // Sylvester: all leading principal minors of DA positive.
    for k in 1..=l {
        let minor: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| int(symmetrizers[i] * matrix[i][j]))
                    .collect()
            })
            .collect();
        if !determinant(minor).is_positive() {
            return bad("not of finite type (DA is not positive definite)".into());
        }
    }
    Ok(CartanData {
        matrix,
        symmetrizers,
    })
}

pub fn a1() -> CartanData {
    validate_cartan(vec![vec![2]], vec![1]).expect("A1 is valid")
}

pub fn a2() -> CartanData {
    validate_cartan(vec![vec![2, -1], vec![-1, 2]], vec![1, 1]).expect("A2 is valid")
}

/// Node 1 long, node 2 short.
pub fn g2() -> CartanData {
    validate_cartan(vec![vec![2, -1], vec![-3, 2]], vec![3, 1]).expect("G2 is valid")
}

pub fn builtin(name: &str) -> Option<CartanData> {
    match name.to_ascii_lowercase().as_str() {
        "a1" => Some(a1()),
        "a2" => Some(a2()),
        "g2" => Some(g2()),
        _ => None,
    }
}

/// Integer matrix acting on weights in fundamental coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement(pub Vec<Vec<i64>>);

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self(identity(rank))
    }

    pub fn apply(&self, weight: &[i64]) -> Vec<i64> {
        self.0
            .iter()
            .map(|row| row.iter().zip(weight).map(|(x, y)| x * y).sum())
            .collect()
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let n = self.0.len();
        Self(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.0 == identity(self.0.len())
    }
}

/// A word `r_1 .. r_p` of 1-based nodes, read as `s_{r_1} ... s_{r_p}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn element(&self, c: &CartanData) -> WeylElement {
        self.0
            .iter()
            .fold(WeylElement::identity(c.rank()), |acc, &i| {
                acc.compose(&c.simple_reflection(i))
            })
    }
}

/// The full Weyl group with a lexicographically least reduced word per element.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<(WeylElement, ReducedWord)>,
}

impl WeylGroup {
    /// Breadth-first closure under right multiplication by simple reflections.
    ///
    /// Parents are expanded in lexicographic order of their words and
    /// generators in ascending order, so the first word found for each element
    /// is the lexicographically least among its shortest words.
    pub fn enumerate(c: &CartanData) -> Result<Self> {
        let gens: Vec<WeylElement> = (1..=c.rank()).map(|i| c.simple_reflection(i)).collect();
        let id = WeylElement::identity(c.rank());
        let mut seen: HashMap<WeylElement, usize> = HashMap::new();
        let mut elements = vec![(id.clone(), ReducedWord(Vec::new()))];
        seen.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            let (w, word) = elements[idx].clone();
            for (g, s) in gens.iter().enumerate() {
                let next = w.compose(s);
                if seen.contains_key(&next) {
                    continue;
                }
                if elements.len() >= MAX_GROUP_ORDER {
                    return Err(Error::InvalidCartan(format!(
                        "Weyl group exceeds {MAX_GROUP_ORDER} elements"
                    )));
                }
                let mut nw = word.0.clone();
                nw.push(g + 1);
                seen.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push((next, ReducedWord(nw)));
            }
        }
        Ok(Self { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[(WeylElement, ReducedWord)] {
        &self.elements
    }

    /// Length of an element, if it belongs to the group.
    pub fn length(&self, w: &WeylElement) -> Option<usize> {
        self.elements
            .iter()
            .find(|(e, _)| e == w)
            .map(|(_, word)| word.len())
    }

    /// The element sending every fundamental weight to a weight with
    /// non-positive coordinates.
    pub fn longest(&self) -> &(WeylElement, ReducedWord) {
        self.elements
            .iter()
            .find(|(w, _)| w.0.iter().flatten().all(|&x| x <= 0))
            .expect("finite Weyl groups have a longest element")
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn reduced_words(&self, c: &CartanData, w: &WeylElement) -> Vec<ReducedWord> {
        let lengths: HashMap<&WeylElement, usize> = self
            .elements
            .iter()
            .map(|(e, word)| (e, word.len()))
            .collect();
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        collect_words(c, &lengths, w, &mut suffix, &mut out);
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }
}

fn collect_words(
    c: &CartanData,
    lengths: &HashMap<&WeylElement, usize>,
    w: &WeylElement,
    suffix: &mut Vec<usize>,
    out: &mut Vec<ReducedWord>,
) {
    let len = lengths[w];
    if len == 0 {
        out.push(ReducedWord(suffix.iter().rev().copied().collect()));
        return;
    }
    for i in 1..=c.rank() {
        let shorter = w.compose(&c.simple_reflection(i));
        if lengths.get(&shorter) == Some(&(len - 1)) {
            suffix.push(i);
            collect_words(c, lengths, &shorter, suffix, out);
            suffix.pop();
        }
    }
}

/// Group order, longest element and its lexicographically least reduced word.
pub fn weyl_longest(c: &CartanData) -> Result<(usize, WeylElement, ReducedWord)> {
    let group = WeylGroup::enumerate(c)?;
    let (w0, word) = group.longest().clone();
    Ok((group.order(), w0, word))
}

/// The exponents `m_j` of the extremal path `v^- = (x_{r_1}^-)^{m_1} ... (x_{r_p}^-)^{m_p} v^+`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathExponents {
    pub fundamental: usize,
    pub word: ReducedWord,
    pub exponents: Vec<i64>,
}

impl PathExponents {
    /// `(j, r_j, m_j)` in the order the lowering operators act: `j = p, p-1, .., 1`.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.word.len())
            .rev()
            .map(|k| (k + 1, self.word.0[k], self.exponents[k]))
    }
}

/// `m_j` is coordinate `r_j` of `σ_j(ω_i)` with `σ_j = s_{r_{j+1}} ... s_{r_p}`.
pub fn path_exponents(c: &CartanData, word: &ReducedWord, i: usize) -> Result<PathExponents> {
    c.check_node(i)?;
    for &r in &word.0 {
        c.check_node(r)?;
    }
    let (_, w0, _) = weyl_longest(c)?;
    let positive = positive_roots(c).len();
    if word.len() != positive || word.element(c) != w0 {
        return Err(Error::WordNotReduced(word.0.clone()));
    }
    let mut exponents = vec![0; word.len()];
    let mut weight = c.fundamental_weight(i);
    for k in (0..word.len()).rev() {
        let r = word.0[k];
        exponents[k] = weight[r - 1];
        weight = c.simple_reflection(r).apply(&weight);
    }
    Ok(PathExponents {
        fundamental: i,
        word: word.clone(),
        exponents,
    })
}

/// Positive roots in simple-root coordinates.
pub fn positive_roots(c: &CartanData) -> Vec<Vec<i64>> {
    // s_i(β) = β - <α_i^∨, β> α_i with <α_i^∨, β> = sum_j a_ij β_j
    orbit_of_simples(c.rank(), |i, beta| {
        (0..c.rank()).map(|j| c.matrix[i][j] * beta[j]).sum()
    })
}

/// Positive coroots in simple-coroot coordinates.
pub fn positive_coroots(c: &CartanData) -> Vec<Vec<i64>> {
    // s_i(β^∨) = β^∨ - <α_i, β^∨> α_i^∨ with <α_i, β^∨> = sum_j a_ji β_j
    orbit_of_simples(c.rank(), |i, beta| {
        (0..c.rank()).map(|j| c.matrix[j][i] * beta[j]).sum()
    })
}

fn orbit_of_simples(l: usize, pairing: impl Fn(usize, &[i64]) -> i64) -> Vec<Vec<i64>> {
    let mut seen: Vec<Vec<i64>> = Vec::new();
    let mut queue: VecDeque<Vec<i64>> = (0..l).map(|i| unit(l, i)).collect();
    while let Some(beta) = queue.pop_front() {
        if seen.contains(&beta) {
            continue;
        }
        for i in 0..l {
            let mut next = beta.clone();
            next[i] -= pairing(i, &beta);
            if !seen.contains(&next) {
                queue.push_back(next);
            }
        }
        seen.push(beta);
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|b| b.iter().all(|&x| x >= 0))
        .collect();
    pos.sort();
    pos
}

/// Dimension of the irreducible module of highest weight `λ` (fundamental
/// coordinates) by the Weyl dimension formula.
pub fn weyl_dim(c: &CartanData, weight: &[i64]) -> Result<BigInt> {
    if weight.len() != c.rank() || weight.iter().any(|&x| x < 0) {
        return Err(Error::NonDominant(weight.to_vec()));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for beta in positive_coroots(c) {
        num *= beta
            .iter()
            .zip(weight)
            .map(|(b, l)| b * (l + 1))
            .sum::<i64>();
        den *= beta.iter().sum::<i64>();
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| unit(n, i)).collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i)).collect()
}

#[allow(clippy::needless_range_loop)]
fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in (col + 1)..n {
            let f = &m[r][col] / &m[col][col];
            for k in col..n {
                let v = &f * &m[col][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

/// Solves a square system given as an augmented matrix.
#[allow(clippy::needless_range_loop)]
fn gauss_solve(aug: &mut [Vec<Rational>]) -> Vec<Rational> {
    let n = aug.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        aug.swap(pivot, col);
        let p = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for k in col..=n {
                    let v = &f * &aug[col][k];
                    aug[r][k] -= v;
                }
            }
        }
    }
    aug.iter().map(|row| row[n].clone()).collect()
}
