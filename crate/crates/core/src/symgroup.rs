//! Permutations, Young subgroups, stabilizers, transversals and the
//! coset/tableau dictionary.
//!
//! Permutations act on the left and compose as functions:
//! `(a * b)(i) = a(b(i))`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::combinatorics::{Bicomposition, Block, Cell, ColorTableau, NumericTableau};
use crate::error::{parse_error, Error, Result};

/// An element of `S_n` stored as zero-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    /// From one-based images, e.g. `[2,1,3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("images are one-based".into()));
        }
        Self::from_images(images.iter().map(|v| v - 1).collect())
    }

    /// A transposition of two zero-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// A cycle on zero-based points: `points[0] -> points[1] -> ... -> points[0]`.
    pub fn cycle(n: usize, points: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &p) in points.iter().enumerate() {
            images[p] = points[(k + 1) % points.len()];
        }
        Permutation { images }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i8 {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut even = true;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len % 2 == 0 {
                even = !even;
            }
        }
        if even {
            1
        } else {
            -1
        }
    }

    /// `σ · t = σ ∘ t`.
    pub fn act_on(&self, t: &NumericTableau) -> NumericTableau {
        let rows = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|&v| self.images[v]).collect())
            .collect();
        NumericTableau::from_rows_unchecked(t.shape().clone(), rows)
    }

    /// Parses one-line notation `[2,1,3]` or cycle notation `(1 2 3)(4 5)`
    /// (commas or spaces inside cycles). Cycle notation needs `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.starts_with('[') {
            let inner = trimmed
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| parse_error(s, 0, "unterminated '['"))?;
            let mut images = Vec::new();
            for tok in inner.split(',').filter(|t| !t.trim().is_empty()) {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| parse_error(s, 0, format!("bad image {tok:?}")))?;
                images.push(v);
            }
            let p = Self::from_one_based(&images).map_err(|e| parse_error(s, 0, e.to_string()))?;
            if p.n() != n {
                return Err(parse_error(s, 0, format!("expected {n} images, found {}", p.n())));
            }
            return Ok(p);
        }
        let mut result = Permutation::identity(n);
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'\t' => i += 1,
                b'(' => {
                    let close = s[i..]
                        .find(')')
                        .map(|k| k + i)
                        .ok_or_else(|| parse_error(s, i, "unterminated cycle"))?;
                    let mut points = Vec::new();
                    let mut pos = i + 1;
                    for tok in s[i + 1..close].split(|c: char| c == ',' || c.is_whitespace()) {
                        if !tok.is_empty() {
                            let v: usize = tok
                                .parse()
                                .map_err(|_| parse_error(s, pos, format!("bad point {tok:?}")))?;
                            if v == 0 || v > n {
                                return Err(parse_error(s, pos, format!("point {v} outside 1..{n}")));
                            }
                            if points.contains(&(v - 1)) {
                                return Err(parse_error(s, pos, format!("point {v} repeated")));
                            }
                            points.push(v - 1);
                        }
                        pos += tok.len() + 1;
                    }
                    if !points.is_empty() {
                        // cycles are composed right to left
                        result = &result * &Permutation::cycle(n, &points);
                    }
                    i = close + 1;
                }
                _ => return Err(parse_error(s, i, "expected '(' or '['")),
            }
        }
        Ok(result)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), rhs.n());
        Permutation {
            images: rhs.images.iter().map(|&v| self.images[v]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

/// Rearranges `slice` into the next lexicographic permutation; false at the last one.
fn next_permutation(slice: &mut [usize]) -> bool {
    if slice.len() < 2 {
        return false;
    }
    let mut i = slice.len() - 1;
    while i > 0 && slice[i - 1] >= slice[i] {
        i -= 1;
    }
    if i == 0 {
        slice.reverse();
        return false;
    }
    let mut j = slice.len() - 1;
    while slice[j] <= slice[i - 1] {
        j -= 1;
    }
    slice.swap(i - 1, j);
    slice[i..].reverse();
    true
}

/// The direct product of the full symmetric groups on disjoint label sets,
/// e.g. a row or column stabilizer or a Young subgroup.
#[derive(Debug, Clone)]
pub struct SetwiseProduct {
    n: usize,
    groups: Vec<Vec<usize>>,
}

impl SetwiseProduct {
    pub fn new(n: usize, groups: Vec<Vec<usize>>) -> Self {
        let groups = groups
            .into_iter()
            .filter(|g| g.len() > 1)
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        SetwiseProduct { n, groups }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn order(&self) -> u128 {
        self.groups
            .iter()
            .map(|g| crate::combinatorics::factorial(g.len()))
            .product()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        let mut group_of = vec![usize::MAX; self.n];
        for (k, g) in self.groups.iter().enumerate() {
            for &v in g {
                group_of[v] = k;
            }
        }
        (0..self.n).all(|i| {
            let j = x.apply(i);
            if group_of[i] == usize::MAX {
                i == j
            } else {
                group_of[i] == group_of[j]
            }
        })
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for g in &self.groups {
            let mut shuffled = g.clone();
            shuffled.shuffle(rng);
            for (&from, &to) in g.iter().zip(&shuffled) {
                images[from] = to;
            }
        }
        Permutation { images }
    }

    /// Every element, in a fixed order.
    pub fn elements(&self) -> SetwiseProductIter<'_> {
        SetwiseProductIter {
            product: self,
            arrangement: self.groups.clone(),
            done: false,
        }
    }
}

pub struct SetwiseProductIter<'a> {
    product: &'a SetwiseProduct,
    arrangement: Vec<Vec<usize>>,
    done: bool,
}

impl Iterator for SetwiseProductIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut images: Vec<usize> = (0..self.product.n).collect();
        for (g, arr) in self.product.groups.iter().zip(&self.arrangement) {
            for (&from, &to) in g.iter().zip(arr) {
                images[from] = to;
            }
        }
        // odometer over the groups
        self.done = true;
        for arr in self.arrangement.iter_mut() {
            if next_permutation(arr) {
                self.done = false;
                break;
            }
        }
        Some(Permutation { images })
    }
}

/// `R_t`: permutations preserving every row of `t` setwise.
pub fn row_stabilizer(t: &NumericTableau) -> SetwiseProduct {
    SetwiseProduct::new(t.n(), t.rows().to_vec())
}

/// `C_t`: permutations preserving every column of `t` setwise.
pub fn column_stabilizer(t: &NumericTableau) -> SetwiseProduct {
    SetwiseProduct::new(t.n(), t.columns())
}

/// `S_{α|β}` on consecutive blocks, with the β-blocks flagged as signed.
#[derive(Debug, Clone)]
pub struct YoungSubgroupSpec {
    kind: Bicomposition,
    blocks: Vec<Block>,
    label_block: Vec<usize>,
    alpha_size: usize,
}

/// `x = d · ξ_α · ξ_β^{+|α|}` with `ξ_β` translated back to `S_{|β|}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub rep: Permutation,
    pub xi_alpha: Permutation,
    pub xi_beta: Permutation,
}

impl YoungSubgroupSpec {
    pub fn new(kind: &Bicomposition) -> Self {
        YoungSubgroupSpec {
            kind: kind.clone(),
            blocks: kind.blocks(),
            label_block: kind.label_blocks(),
            alpha_size: kind.alpha.n(),
        }
    }

    pub fn kind(&self) -> &Bicomposition {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.label_block.len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Block index of each label.
    pub fn label_blocks(&self) -> &[usize] {
        &self.label_block
    }

    pub fn order(&self) -> u128 {
        self.as_product().order()
    }

    pub fn as_product(&self) -> SetwiseProduct {
        SetwiseProduct::new(
            self.n(),
            self.blocks
                .iter()
                .map(|b| (b.start..b.start + b.len).collect())
                .collect(),
        )
    }

    /// The subgroup `S_α` (β-labels fixed).
    pub fn alpha_product(&self) -> SetwiseProduct {
        SetwiseProduct::new(
            self.n(),
            self.blocks
                .iter()
                .filter(|b| !b.signed)
                .map(|b| (b.start..b.start + b.len).collect())
                .collect(),
        )
    }

    /// The subgroup `S_β^{+|α|}` (α-labels fixed).
    pub fn beta_product(&self) -> SetwiseProduct {
        SetwiseProduct::new(
            self.n(),
            self.blocks
                .iter()
                .filter(|b| b.signed)
                .map(|b| (b.start..b.start + b.len).collect())
                .collect(),
        )
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        (0..self.n()).all(|i| self.label_block[x.apply(i)] == self.label_block[i])
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.as_product().random(rng)
    }

    /// `sgn(ξ_β)` for `ξ ∈ S_{α|β}`.
    pub fn beta_sign(&self, xi: &Permutation) -> i8 {
        let mut inversions = 0usize;
        for b in self.blocks.iter().filter(|b| b.signed) {
            let seg = &xi.images()[b.start..b.start + b.len];
            for i in 0..seg.len() {
                inversions += seg[i + 1..].iter().filter(|&&v| v < seg[i]).count();
            }
        }
        if inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Splits `ξ ∈ S_{α|β}` into `(ξ_α, ξ_β)` with `ξ_β ∈ S_{|β|}`.
    pub fn split(&self, xi: &Permutation) -> (Permutation, Permutation) {
        let a = self.alpha_size;
        let alpha = xi.images()[..a].to_vec();
        let beta = xi.images()[a..].iter().map(|v| v - a).collect();
        (
            Permutation::from_images_unchecked(alpha),
            Permutation::from_images_unchecked(beta),
        )
    }

    /// `ξ_α · ξ_β^{+|α|}`.
    pub fn embed(&self, xi_alpha: &Permutation, xi_beta: &Permutation) -> Permutation {
        let a = self.alpha_size;
        let images = xi_alpha
            .images()
            .iter()
            .copied()
            .chain(xi_beta.images().iter().map(|v| v + a))
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Canonical key of the coset `x S_{α|β}`: the block of `x^{-1}(v)` for each label `v`.
    pub fn coset_key(&self, x: &Permutation) -> Vec<usize> {
        let mut key = vec![0; self.n()];
        for i in 0..self.n() {
            key[x.apply(i)] = self.label_block[i];
        }
        key
    }

    /// The representative of a coset that is increasing on every block.
    pub fn minimal_rep_from_key(&self, key: &[usize]) -> Permutation {
        let mut next: Vec<usize> = self.blocks.iter().map(|b| b.start).collect();
        let mut images = vec![0; self.n()];
        for (v, &b) in key.iter().enumerate() {
            images[next[b]] = v;
            next[b] += 1;
        }
        Permutation::from_images_unchecked(images)
    }

    pub fn minimal_rep(&self, x: &Permutation) -> Permutation {
        self.minimal_rep_from_key(&self.coset_key(x))
    }

    /// Decomposes `x` against the block-increasing representative of its coset.
    pub fn coset_decompose(&self, x: &Permutation) -> CosetDecomposition {
        let rep = self.minimal_rep(x);
        let xi = &rep.inverse() * x;
        let (xi_alpha, xi_beta) = self.split(&xi);
        CosetDecomposition {
            rep,
            xi_alpha,
            xi_beta,
        }
    }
}

/// `coset_decompose(x, (α|β))` against the distinguished representatives.
pub fn coset_decompose(x: &Permutation, kind: &Bicomposition) -> CosetDecomposition {
    YoungSubgroupSpec::new(kind).coset_decompose(x)
}

/// A left transversal `Γ` of `S_{α|β}` in `S_n`.
#[derive(Debug, Clone)]
pub struct Transversal {
    spec: YoungSubgroupSpec,
    reps: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
}

impl Transversal {
    /// Block-increasing representatives in lexicographic order of their images.
    pub fn distinguished(kind: &Bicomposition) -> Self {
        let spec = YoungSubgroupSpec::new(kind);
        let n = spec.n();
        let mut keys = Vec::new();
        fn rec(remaining: &mut [usize], key: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
            if key.len() == n {
                out.push(key.clone());
                return;
            }
            for b in 0..remaining.len() {
                if remaining[b] > 0 {
                    remaining[b] -= 1;
                    key.push(b);
                    rec(remaining, key, n, out);
                    key.pop();
                    remaining[b] += 1;
                }
            }
        }
        rec(&mut kind.block_sizes(), &mut Vec::new(), n, &mut keys);
        let mut reps: Vec<Permutation> = keys.iter().map(|k| spec.minimal_rep_from_key(k)).collect();
        reps.sort();
        Self::from_reps(spec, reps)
    }

    /// Replaces each distinguished representative `d` by `d ξ_d` for a random `ξ_d ∈ S_{α|β}`.
    pub fn randomized<R: Rng + ?Sized>(kind: &Bicomposition, rng: &mut R) -> Self {
        let base = Self::distinguished(kind);
        let product = base.spec.as_product();
        let reps = base
            .reps
            .iter()
            .map(|d| d * &product.random(rng))
            .collect();
        Self::from_reps(base.spec, reps)
    }

    fn from_reps(spec: YoungSubgroupSpec, reps: Vec<Permutation>) -> Self {
        let index = reps
            .iter()
            .enumerate()
            .map(|(i, d)| (spec.coset_key(d), i))
            .collect();
        Transversal { spec, reps, index }
    }

    pub fn spec(&self) -> &YoungSubgroupSpec {
        &self.spec
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the representative of `x S_{α|β}`.
    pub fn index_of(&self, x: &Permutation) -> usize {
        self.index[&self.spec.coset_key(x)]
    }

    pub fn index_of_key(&self, key: &[usize]) -> usize {
        self.index[key]
    }

    /// `x = d ξ_α ξ_β^{+|α|}` with `d ∈ Γ`; returns the index of `d`.
    pub fn decompose(&self, x: &Permutation) -> (usize, CosetDecomposition) {
        let idx = self.index_of(x);
        let rep = self.reps[idx].clone();
        let xi = &rep.inverse() * x;
        let (xi_alpha, xi_beta) = self.spec.split(&xi);
        (
            idx,
            CosetDecomposition {
                rep,
                xi_alpha,
                xi_beta,
            },
        )
    }
}

/// A fixed λ-tableau `t_0` together with a type `(α|β)`: the data through
/// which `S_n` acts on coloured tableaux.
#[derive(Debug, Clone)]
pub struct TableauFrame {
    t0: NumericTableau,
    spec: YoungSubgroupSpec,
}

impl TableauFrame {
    pub fn new(t0: NumericTableau, kind: &Bicomposition) -> Result<Self> {
        if t0.n() != kind.n() {
            return Err(Error::SizeMismatch {
                shape: t0.n(),
                kind: kind.n(),
            });
        }
        Ok(TableauFrame {
            t0,
            spec: YoungSubgroupSpec::new(kind),
        })
    }

    pub fn t0(&self) -> &NumericTableau {
        &self.t0
    }

    pub fn spec(&self) -> &YoungSubgroupSpec {
        &self.spec
    }

    pub fn kind(&self) -> &Bicomposition {
        self.spec.kind()
    }

    pub fn n(&self) -> usize {
        self.t0.n()
    }

    /// `T_d` with colours replaced by block indices.
    pub fn block_tableau(&self, d: &Permutation) -> Vec<Vec<usize>> {
        let key = self.spec.coset_key(d);
        self.t0
            .rows()
            .iter()
            .map(|r| r.iter().map(|&v| key[v]).collect())
            .collect()
    }

    /// `T_d = d · T_0`.
    pub fn coset_tableau(&self, d: &Permutation) -> ColorTableau {
        let kind = self.kind();
        ColorTableau::from_rows_unchecked(
            self.block_tableau(d)
                .into_iter()
                .map(|r| r.into_iter().map(|b| kind.color_of_block(b)).collect())
                .collect(),
        )
    }

    /// Row condition: colours repeated within a row of `T_d` are all `c` colours.
    pub fn row_condition(&self, d: &Permutation) -> bool {
        let alpha_blocks = self.kind().alpha.len();
        self.block_tableau(d).iter().all(|row| {
            let mut seen: Vec<usize> = row.iter().copied().filter(|&b| b >= alpha_blocks).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Column condition: colours repeated within a column of `T_d` are all `d` colours.
    pub fn column_condition(&self, d: &Permutation) -> bool {
        let alpha_blocks = self.kind().alpha.len();
        let t = self.block_tableau(d);
        let width = t.first().map_or(0, Vec::len);
        (0..width).all(|j| {
            let mut seen: Vec<usize> = t
                .iter()
                .take_while(|r| r.len() > j)
                .map(|r| r[j])
                .filter(|&b| b < alpha_blocks)
                .collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// `ω ∈ R_{t_0} 𝔡 S_{α|β}`, tested by comparing row contents of `T_ω` and `T_𝔡`.
    pub fn in_row_double_coset(&self, omega: &Permutation, rep: &Permutation) -> bool {
        let a = self.block_tableau(omega);
        let b = self.block_tableau(rep);
        a.into_iter().zip(b).all(|(mut x, mut y)| {
            x.sort_unstable();
            y.sort_unstable();
            x == y
        })
    }

    /// Some `τ ∈ R_{t_0}` with `τ · T_from = T_to`, when the row contents agree.
    pub fn row_matching(&self, from: &Permutation, to: &Permutation) -> Option<Permutation> {
        self.matching(&self.block_tableau(from), &self.block_tableau(to), false)
    }

    /// Some `σ ∈ C_{t_0}` with `σ · T_from = T_to`, when the column contents agree.
    pub fn column_matching(&self, from: &Permutation, to: &Permutation) -> Option<Permutation> {
        self.matching(&self.block_tableau(from), &self.block_tableau(to), true)
    }

    /// Matches equal colours left to right within each row (or top to bottom
    /// within each column) and lifts the cell matching to labels through `t_0`.
    pub(crate) fn matching(
        &self,
        from: &[Vec<usize>],
        to: &[Vec<usize>],
        by_column: bool,
    ) -> Option<Permutation> {
        let lines: Vec<Vec<Cell>> = if by_column {
            let width = from.first().map_or(0, Vec::len);
            (0..width)
                .map(|col| {
                    (0..from.len())
                        .take_while(|&row| from[row].len() > col)
                        .map(|row| Cell { row, col })
                        .collect()
                })
                .collect()
        } else {
            from.iter()
                .enumerate()
                .map(|(row, r)| (0..r.len()).map(|col| Cell { row, col }).collect())
                .collect()
        };
        let mut images: Vec<usize> = (0..self.n()).collect();
        for line in lines {
            let mut used = vec![false; line.len()];
            for &src in &line {
                let colour = from[src.row][src.col];
                let k = (0..line.len())
                    .find(|&k| !used[k] && to[line[k].row][line[k].col] == colour)?;
                used[k] = true;
                images[self.t0.get(src)] = self.t0.get(line[k]);
            }
        }
        Some(Permutation::from_images_unchecked(images))
    }

    /// `ε_𝔡(ω) = sgn(ξ_β)` for a factorization `ω = τ 𝔡 ξ_α ξ_β^{+|α|}`.
    pub fn epsilon(&self, omega: &Permutation, rep: &Permutation) -> Result<i8> {
        if !self.row_condition(rep) {
            return Err(Error::NotInR(rep.to_string()));
        }
        let tau = self
            .row_matching(rep, omega)
            .ok_or_else(|| Error::NotInDoubleCoset {
                omega: omega.to_string(),
                rep: rep.to_string(),
            })?;
        Ok(self.epsilon_with(omega, rep, &tau))
    }

    /// `sgn(ξ_β)` where `ξ = 𝔡^{-1} τ^{-1} ω`; `τ` must satisfy `τ 𝔡 S_{α|β} = ω S_{α|β}`.
    pub(crate) fn epsilon_with(&self, omega: &Permutation, rep: &Permutation, tau: &Permutation) -> i8 {
        let xi = &(&rep.inverse() * &tau.inverse()) * omega;
        debug_assert!(self.spec.contains(&xi));
        self.spec.beta_sign(&xi)
    }
}

/// `coset_tableau(d, t_0, (α|β))`.
pub fn coset_tableau(d: &Permutation, t0: &NumericTableau, kind: &Bicomposition) -> Result<ColorTableau> {
    Ok(TableauFrame::new(t0.clone(), kind)?.coset_tableau(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_bicompositions, enumerate_partitions, Partition};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn ab(s: &str) -> Bicomposition {
        s.parse().unwrap()
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        SetwiseProduct::new(n, vec![(0..n).collect()]).elements().collect()
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::transposition(3, 0, 1).sign(), -1);
        assert_eq!(Permutation::cycle(3, &[0, 1, 2]).sign(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a = Permutation::random(6, &mut rng);
            let b = Permutation::random(6, &mut rng);
            assert_eq!((&a * &b).sign(), a.sign() * b.sign());
            assert!((&a * &a.inverse()).is_identity());
        }
    }

    #[test]
    fn parse_notations() {
        let p = Permutation::parse("[2,1,3]", 3).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
        assert_eq!(p.to_string(), "[2,1,3]");
        let c = Permutation::parse("(3 7 5)", 7).unwrap();
        assert_eq!(c.apply(2), 6);
        assert_eq!(c.apply(6), 4);
        assert_eq!(c.apply(4), 2);
        let c2 = Permutation::parse("(1,2)(2,3)", 3).unwrap();
        // (1 2)(2 3) maps 3 -> 2 -> 1
        assert_eq!(c2.apply(2), 0);
        assert!(Permutation::parse("(1 9)", 3).is_err());
        assert!(Permutation::parse("[1,1,2]", 3).is_err());
        assert!(Permutation::parse("x", 3).is_err());
    }

    #[test]
    fn stabilizer_sizes() {
        let t = NumericTableau::initial(&"2,1".parse().unwrap());
        assert_eq!(row_stabilizer(&t).elements().count(), 2);
        assert_eq!(column_stabilizer(&t).elements().count(), 2);
        let col = NumericTableau::initial(&"1,1,1,1".parse().unwrap());
        assert_eq!(row_stabilizer(&col).order(), 1);
        assert_eq!(column_stabilizer(&col).elements().count(), 24);
        let distinct: HashSet<_> = column_stabilizer(&col).elements().collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn conjugated_row_stabilizer() {
        let lam: Partition = "3,2".parse().unwrap();
        let t = NumericTableau::initial(&lam);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let s = Permutation::random(5, &mut rng);
            let moved = row_stabilizer(&s.act_on(&t));
            let conj: HashSet<_> = row_stabilizer(&t)
                .elements()
                .map(|r| &(&s * &r) * &s.inverse())
                .collect();
            let direct: HashSet<_> = moved.elements().collect();
            assert_eq!(conj, direct);
        }
    }

    #[test]
    fn transversal_sizes() {
        assert_eq!(Transversal::distinguished(&ab("|4")).reps(), &[Permutation::identity(4)]);
        assert_eq!(Transversal::distinguished(&ab("1|2")).len(), 3);
        // 720 / 36 by counting cosets of all 720 permutations
        let spec = YoungSubgroupSpec::new(&ab("3|3"));
        let cosets: HashSet<_> = all_perms(6).iter().map(|x| spec.coset_key(x)).collect();
        assert_eq!(cosets.len(), 20);
        assert_eq!(Transversal::distinguished(&ab("3|3")).len(), 20);
        for n in 0..=5 {
            for kind in enumerate_bicompositions(n) {
                let g = Transversal::distinguished(&kind);
                let order = YoungSubgroupSpec::new(&kind).order();
                assert_eq!(g.len() as u128 * order, crate::combinatorics::factorial(n));
                assert_eq!(
                    Transversal::distinguished(&kind).len(),
                    Transversal::distinguished(&kind.swapped()).len()
                );
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let kind = ab("1|2");
        let id = Permutation::identity(3);
        let d = coset_decompose(&id, &kind);
        assert!(d.rep.is_identity() && d.xi_alpha.is_identity() && d.xi_beta.is_identity());
        let x = Permutation::transposition(3, 1, 2);
        let d = coset_decompose(&x, &kind);
        assert!(d.rep.is_identity());
        assert_eq!(d.xi_beta, Permutation::transposition(2, 0, 1));
        assert_eq!(d.xi_beta.sign(), -1);
    }

    #[test]
    fn decomposition_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let n = rng.gen_range(1..=7);
            let kinds = enumerate_bicompositions(n);
            let kind = kinds.choose(&mut rng).unwrap();
            let spec = YoungSubgroupSpec::new(kind);
            let x = Permutation::random(n, &mut rng);
            let dec = spec.coset_decompose(&x);
            let back = &dec.rep * &spec.embed(&dec.xi_alpha, &dec.xi_beta);
            assert_eq!(back, x);
            let g = Transversal::randomized(kind, &mut rng);
            let (idx, dec) = g.decompose(&x);
            assert_eq!(g.reps()[idx], dec.rep);
            assert_eq!(&dec.rep * &spec.embed(&dec.xi_alpha, &dec.xi_beta), x);
        }
    }

    #[test]
    fn coset_tableau_dictionary() {
        let lam: Partition = "3,2,1".parse().unwrap();
        let kind = ab("2|3,1");
        let frame = TableauFrame::new(NumericTableau::initial(&lam), &kind).unwrap();
        let t0 = frame.coset_tableau(&Permutation::identity(6));
        assert_eq!(t0.to_string(), "c1,c1,d1/d1,d1/d2");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = Permutation::random(6, &mut rng);
            let xi = frame.spec().random(&mut rng);
            assert_eq!(frame.coset_tableau(&(&d * &xi)), frame.coset_tableau(&d));
            let e = Permutation::random(6, &mut rng);
            let same = frame.coset_tableau(&d) == frame.coset_tableau(&e);
            assert_eq!(same, frame.spec().contains(&(&d.inverse() * &e)));
        }
    }

    #[test]
    fn double_coset_matches_enumeration() {
        for n in 1..=4 {
            for lam in enumerate_partitions(n) {
                let t0 = NumericTableau::initial(&lam);
                let rows = row_stabilizer(&t0);
                for kind in enumerate_bicompositions(n) {
                    let frame = TableauFrame::new(t0.clone(), &kind).unwrap();
                    let young: Vec<_> = frame.spec().as_product().elements().collect();
                    for rep in Transversal::distinguished(&kind).reps() {
                        let coset: HashSet<Permutation> = rows
                            .elements()
                            .flat_map(|r| young.iter().map(move |y| &(&r * rep) * y))
                            .collect();
                        for w in all_perms(n) {
                            assert_eq!(frame.in_row_double_coset(&w, rep), coset.contains(&w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn epsilon_basics() {
        let kind = ab("|2");
        let frame = TableauFrame::new(NumericTableau::initial(&"1,1".parse().unwrap()), &kind).unwrap();
        let id = Permutation::identity(2);
        let s = Permutation::transposition(2, 0, 1);
        assert_eq!(frame.epsilon(&id, &id).unwrap(), 1);
        assert_eq!(frame.epsilon(&s, &id).unwrap(), -1);

        let frame = TableauFrame::new(NumericTableau::initial(&"2".parse().unwrap()), &kind).unwrap();
        assert!(matches!(frame.epsilon(&id, &id), Err(Error::NotInR(_))));

        let frame =
            TableauFrame::new(NumericTableau::initial(&"2,1".parse().unwrap()), &ab("1|1,1")).unwrap();
        // T_id = c1,d1/d2 ; (1 3) gives d2,d1/c1 which has other row contents
        let w = Permutation::transposition(3, 0, 2);
        assert!(matches!(
            frame.epsilon(&w, &Permutation::identity(3)),
            Err(Error::NotInDoubleCoset { .. })
        ));
    }

    /// Every factorization `ω = τ 𝔡 ξ` with `τ ∈ R_{t_0}` gives the same `sgn(ξ_β)`.
    #[test]
    fn epsilon_independent_of_factorization() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 50 {
            let n = rng.gen_range(2..=6);
            let parts = enumerate_partitions(n);
            let lam = parts.choose(&mut rng).unwrap();
            let kinds = enumerate_bicompositions(n);
            let kind = kinds.choose(&mut rng).unwrap();
            let frame = TableauFrame::new(NumericTableau::initial(lam), kind).unwrap();
            let rep = Permutation::random(n, &mut rng);
            if !frame.row_condition(&rep) {
                continue;
            }
            let rows = row_stabilizer(frame.t0());
            let tau = rows.random(&mut rng);
            let xi = frame.spec().random(&mut rng);
            let omega = &(&tau * &rep) * &xi;
            let expected = frame.spec().beta_sign(&xi);
            assert_eq!(frame.epsilon(&omega, &rep).unwrap(), expected);
            // search every τ' ∈ R_{t_0} giving a valid factorization
            for tau2 in rows.elements() {
                let xi2 = &(&rep.inverse() * &tau2.inverse()) * &omega;
                if frame.spec().contains(&xi2) {
                    assert_eq!(frame.spec().beta_sign(&xi2), expected);
                }
            }
            // ε(ω ξ') = ε(ω) sgn(ξ'_β)
            let extra = frame.spec().random(&mut rng);
            assert_eq!(
                frame.epsilon(&(&omega * &extra), &rep).unwrap(),
                expected * frame.spec().beta_sign(&extra)
            );
            checked += 1;
        }
    }
}
