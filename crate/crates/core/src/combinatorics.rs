//! Partitions, compositions, Young diagrams and tableaux.
//!
//! Labels and cell coordinates are zero-based internally; `Display` and the
//! JSON layer convert to the usual one-based notation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{parse_error, Error, Result};

/// Parses a comma separated list of positive integers. The empty string is the
/// empty list.
fn parse_parts(input: &str, offset: usize, full: &str) -> Result<Vec<usize>> {
    let mut parts = Vec::new();
    if input.trim().is_empty() {
        return Ok(parts);
    }
    let mut pos = offset;
    for token in input.split(',') {
        let trimmed = token.trim();
        let lead = token.len() - token.trim_start().len();
        match trimmed.parse::<usize>() {
            Ok(0) => return Err(parse_error(full, pos + lead, "parts must be positive")),
            Ok(v) => parts.push(v),
            Err(_) => {
                return Err(parse_error(
                    full,
                    pos + lead,
                    format!("expected a positive integer, found {trimmed:?}"),
                ))
            }
        }
        pos += token.len() + 1;
    }
    Ok(parts)
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidTableau("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The size |λ|.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Length of column `j` (zero-based).
    pub fn column_len(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p > j).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row < self.0.len() && cell.col < self.0[cell.row]
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell { row, col }))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s, 0, s)?;
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            // byte offset of the offending token
            let pos = s
                .match_indices(',')
                .nth(i)
                .map(|(p, _)| p + 1)
                .unwrap_or(0);
            return Err(parse_error(s, pos, "partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A finite sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidTableau("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Concatenation `self ⊔ other`.
    pub fn concat(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().chain(other.0.iter()).copied().collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_parts(s, 0, s).map(Composition)
    }
}

/// All compositions of `n`, ordered lexicographically.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition(current.clone()));
            return;
        }
        for part in 1..=remaining {
            current.push(part);
            rec(remaining - part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// One block of the concatenated composition `α ⊔ β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub start: usize,
    pub len: usize,
    /// True for blocks coming from β, which carry the sign twist.
    pub signed: bool,
}

/// A pair of compositions `(α|β)`; serializes as `{"alpha":[..],"beta":[..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bicomposition {
    pub alpha: Composition,
    pub beta: Composition,
}

impl Bicomposition {
    pub fn new(alpha: Composition, beta: Composition) -> Self {
        Bicomposition { alpha, beta }
    }

    pub fn n(&self) -> usize {
        self.alpha.n() + self.beta.n()
    }

    /// `(β|α)`.
    pub fn swapped(&self) -> Bicomposition {
        Bicomposition::new(self.beta.clone(), self.alpha.clone())
    }

    pub fn num_blocks(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }

    /// The blocks of `S_{α|β}` on labels `0..n`, α-blocks first.
    pub fn blocks(&self) -> Vec<Block> {
        let mut start = 0;
        let mut out = Vec::with_capacity(self.num_blocks());
        for (&len, signed) in self
            .alpha
            .parts()
            .iter()
            .map(|p| (p, false))
            .chain(self.beta.parts().iter().map(|p| (p, true)))
        {
            out.push(Block { start, len, signed });
            start += len;
        }
        out
    }

    /// Block index of every label.
    pub fn label_blocks(&self) -> Vec<usize> {
        self.blocks()
            .iter()
            .enumerate()
            .flat_map(|(b, blk)| std::iter::repeat_n(b, blk.len))
            .collect()
    }

    pub fn color_of_block(&self, block: usize) -> Color {
        if block < self.alpha.len() {
            Color::C(block as u32 + 1)
        } else {
            Color::D((block - self.alpha.len()) as u32 + 1)
        }
    }

    pub fn block_of_color(&self, color: Color) -> Option<usize> {
        match color {
            Color::C(i) if (1..=self.alpha.len() as u32).contains(&i) => Some(i as usize - 1),
            Color::D(i) if (1..=self.beta.len() as u32).contains(&i) => {
                Some(self.alpha.len() + i as usize - 1)
            }
            _ => None,
        }
    }

    /// Multiplicity of each block / color.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.alpha
            .parts()
            .iter()
            .chain(self.beta.parts())
            .copied()
            .collect()
    }
}

impl fmt::Display for Bicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

impl FromStr for Bicomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bar = s
            .find('|')
            .ok_or_else(|| parse_error(s, 0, "expected \"alpha|beta\""))?;
        if let Some(extra) = s[bar + 1..].find('|') {
            return Err(parse_error(s, bar + 1 + extra, "more than one '|'"));
        }
        let alpha = parse_parts(&s[..bar], 0, s)?;
        let beta = parse_parts(&s[bar + 1..], bar + 1, s)?;
        Ok(Bicomposition::new(Composition(alpha), Composition(beta)))
    }
}

/// All bicompositions of `n`, ordered by `|α|` and then lexicographically.
pub fn enumerate_bicompositions(n: usize) -> Vec<Bicomposition> {
    let mut out = Vec::new();
    for a in 0..=n {
        for alpha in enumerate_compositions(a) {
            for beta in enumerate_compositions(n - a) {
                out.push(Bicomposition::new(alpha.clone(), beta));
            }
        }
    }
    out
}

/// A node of a Young diagram, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.col + 1)
    }
}

/// A bijective filling of `[λ]` by the labels `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl NumericTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n];
        for &v in rows.iter().flatten() {
            if v >= n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be a bijection onto 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(NumericTableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(shape: Partition, rows: Vec<Vec<usize>>) -> Self {
        NumericTableau { shape, rows }
    }

    /// `t^λ`, labels filled row by row.
    pub fn initial(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        NumericTableau {
            shape: shape.clone(),
            rows,
        }
    }

    /// Parses rows separated by `/` with one-based comma separated labels,
    /// e.g. `"1,7/2/3/4/5/6"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for chunk in s.split('/') {
            let row = parse_parts(chunk, offset, s)?;
            if row.is_empty() {
                return Err(parse_error(s, offset, "empty row"));
            }
            rows.push(row.into_iter().map(|v| v - 1).collect());
            offset += chunk.len() + 1;
        }
        NumericTableau::new(rows).map_err(|e| parse_error(s, 0, e.to_string()))
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn rows_mut(&mut self) -> &mut [Vec<usize>] {
        &mut self.rows
    }

    pub fn get(&self, cell: Cell) -> usize {
        self.rows[cell.row][cell.col]
    }

    pub fn set(&mut self, cell: Cell, label: usize) {
        self.rows[cell.row][cell.col] = label;
    }

    /// Labels of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|r| r.len() > j)
            .map(|r| r[j])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).map(|j| self.column(j)).collect()
    }

    /// `cell_of[label]`, the inverse of the tableau.
    pub fn cell_of(&self) -> Vec<Cell> {
        let mut out = vec![Cell { row: 0, col: 0 }; self.n()];
        for (row, r) in self.rows.iter().enumerate() {
            for (col, &v) in r.iter().enumerate() {
                out[v] = Cell { row, col };
            }
        }
        out
    }

    /// Row-reading word.
    pub fn word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(low, up)| up < low));
        rows_ok && cols_ok
    }

    pub fn is_column_increasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(low, up)| up < low))
    }
}

impl fmt::Display for NumericTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v + 1)?;
            }
        }
        Ok(())
    }
}

/// Standard λ-tableaux, ordered lexicographically by row-reading word.
pub fn enumerate_standard_tableaux(shape: &Partition) -> Vec<NumericTableau> {
    // place labels 0..n one at a time into addable corners
    fn rec(
        shape: &Partition,
        fill: &mut Vec<Vec<usize>>,
        next: usize,
        out: &mut Vec<NumericTableau>,
    ) {
        if next == shape.n() {
            out.push(NumericTableau::from_rows_unchecked(shape.clone(), fill.clone()));
            return;
        }
        for row in 0..shape.len() {
            let len = fill[row].len();
            let fits = len < shape.parts()[row] && (row == 0 || fill[row - 1].len() > len);
            if fits {
                fill[row].push(next);
                rec(shape, fill, next + 1, out);
                fill[row].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut vec![Vec::new(); shape.len()], 0, &mut out);
    out.sort_by_key(NumericTableau::word);
    out
}

/// A colour `c_k` or `d_k` (one-based index). Ordered `c_1 < c_2 < … < d_1 < d_2 < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    C(u32),
    D(u32),
}

impl Color {
    pub fn is_c(self) -> bool {
        matches!(self, Color::C(_))
    }

    pub fn is_d(self) -> bool {
        matches!(self, Color::D(_))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::C(i) => write!(f, "c{i}"),
            Color::D(i) => write!(f, "d{i}"),
        }
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || parse_error(s, 0, "expected a colour like c1 or d2");
        let (kind, idx) = s.split_at(s.len().min(1));
        let idx: u32 = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match kind {
            "c" | "C" => Ok(Color::C(idx)),
            "d" | "D" => Ok(Color::D(idx)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Color {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A colouring of `[λ]` of type `(α|β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorTableau {
    rows: Vec<Vec<Color>>,
}

impl ColorTableau {
    /// Checks the colour multiplicities against `kind`.
    pub fn new(rows: Vec<Vec<Color>>, kind: &Bicomposition) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())?;
        let mut counts = vec![0usize; kind.num_blocks()];
        for &c in rows.iter().flatten() {
            let b = kind
                .block_of_color(c)
                .ok_or_else(|| Error::InvalidTableau(format!("colour {c} not in type {kind}")))?;
            counts[b] += 1;
        }
        if counts != kind.block_sizes() {
            return Err(Error::InvalidTableau(format!(
                "colour multiplicities do not match type {kind}"
            )));
        }
        Ok(ColorTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Color>>) -> Self {
        ColorTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Color>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Color {
        self.rows[cell.row][cell.col]
    }

    pub fn column(&self, j: usize) -> Vec<Color> {
        self.rows
            .iter()
            .take_while(|r| r.len() > j)
            .map(|r| r[j])
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `C_j(T)` as a sorted list.
    pub fn column_multiset(&self, j: usize) -> Vec<Color> {
        let mut col = self.column(j);
        col.sort();
        col
    }

    pub fn row_multiset(&self, i: usize) -> Vec<Color> {
        let mut row = self.rows[i].clone();
        row.sort();
        row
    }

    pub fn word(&self) -> Vec<Color> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Largest number of equal colours in a single column.
    pub fn max_column_repeat(&self) -> usize {
        (0..self.num_columns())
            .flat_map(|j| {
                let col = self.column_multiset(j);
                let mut runs = Vec::new();
                let mut k = 0;
                while k < col.len() {
                    let run = col[k..].iter().take_while(|&&c| c == col[k]).count();
                    runs.push(run);
                    k += run;
                }
                runs
            })
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for ColorTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for ColorTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

fn check_sizes(shape: &Partition, kind: &Bicomposition) -> Result<()> {
    if shape.n() != kind.n() {
        return Err(Error::SizeMismatch {
            shape: shape.n(),
            kind: kind.n(),
        });
    }
    Ok(())
}

fn split_rows<T: Copy>(shape: &Partition, word: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::with_capacity(shape.len());
    let mut start = 0;
    for &len in shape.parts() {
        out.push(word[start..start + len].to_vec());
        start += len;
    }
    out
}

/// Every λ-tableau of type `(α|β)`, ordered lexicographically by row-reading word.
pub fn enumerate_color_tableaux(shape: &Partition, kind: &Bicomposition) -> Result<Vec<ColorTableau>> {
    check_sizes(shape, kind)?;
    fn rec(
        remaining: &mut [usize],
        word: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for b in 0..remaining.len() {
            if remaining[b] > 0 {
                remaining[b] -= 1;
                word.push(b);
                rec(remaining, word, n, out);
                word.pop();
                remaining[b] += 1;
            }
        }
    }
    let mut words = Vec::new();
    rec(&mut kind.block_sizes(), &mut Vec::new(), shape.n(), &mut words);
    Ok(words
        .into_iter()
        .map(|w| {
            let colors: Vec<Color> = w.iter().map(|&b| kind.color_of_block(b)).collect();
            ColorTableau::from_rows_unchecked(split_rows(shape, &colors))
        })
        .collect())
}

fn row_pair_ok(left: Color, right: Color) -> bool {
    left < right || (left == right && left.is_c())
}

fn column_pair_ok(upper: Color, lower: Color) -> bool {
    upper < lower || (upper == lower && lower.is_d())
}

/// Semistandard in the signed sense: rows and columns weakly increase, rows
/// repeat only `c` colours and columns repeat only `d` colours.
pub fn is_semistandard(t: &ColorTableau) -> bool {
    let rows = &t.rows;
    let rows_ok = rows
        .iter()
        .all(|r| r.windows(2).all(|w| row_pair_ok(w[0], w[1])));
    let cols_ok = rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(&low, &up)| column_pair_ok(up, low)));
    rows_ok && cols_ok
}

/// Semistandard λ-tableaux of type `(α|β)`, in the same order as
/// [`enumerate_color_tableaux`].
pub fn enumerate_semistandard(shape: &Partition, kind: &Bicomposition) -> Result<Vec<ColorTableau>> {
    check_sizes(shape, kind)?;
    let cells: Vec<Cell> = shape.cells().collect();
    let colors: Vec<Color> = (0..kind.num_blocks()).map(|b| kind.color_of_block(b)).collect();
    let mut remaining = kind.block_sizes();
    let mut fill: Vec<Vec<Color>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();

    fn rec(
        idx: usize,
        cells: &[Cell],
        colors: &[Color],
        remaining: &mut [usize],
        fill: &mut Vec<Vec<Color>>,
        out: &mut Vec<ColorTableau>,
    ) {
        if idx == cells.len() {
            out.push(ColorTableau::from_rows_unchecked(fill.clone()));
            return;
        }
        let Cell { row, col } = cells[idx];
        for b in 0..colors.len() {
            if remaining[b] == 0 {
                continue;
            }
            let c = colors[b];
            if col > 0 && !row_pair_ok(fill[row][col - 1], c) {
                continue;
            }
            if row > 0 && !column_pair_ok(fill[row - 1][col], c) {
                continue;
            }
            remaining[b] -= 1;
            fill[row].push(c);
            rec(idx + 1, cells, colors, remaining, fill, out);
            fill[row].pop();
            remaining[b] += 1;
        }
    }
    rec(0, &cells, &colors, &mut remaining, &mut fill, &mut out);
    Ok(out)
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n! / Π α_i! Π β_j!`, the index of `S_{α|β}` in `S_n`.
pub fn young_index(kind: &Bicomposition) -> u128 {
    kind.block_sizes()
        .iter()
        .fold(factorial(kind.n()), |acc, &b| acc / factorial(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ab(s: &str) -> Bicomposition {
        s.parse().unwrap()
    }

    fn c(rows: &[&[&str]]) -> ColorTableau {
        ColorTableau::from_rows_unchecked(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
    }

    /// Brute force: every weakly decreasing sequence drawn from 1..=n.
    fn brute_partition_count(n: usize) -> usize {
        fn rec(rem: usize, max: usize) -> usize {
            if rem == 0 {
                return 1;
            }
            (1..=rem.min(max)).map(|k| rec(rem - k, k)).sum()
        }
        rec(n, n)
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(brute_partition_count(6), 11);
        assert_eq!(enumerate_partitions(6).len(), 11);
        for n in 0..10 {
            assert_eq!(enumerate_partitions(n).len(), brute_partition_count(n));
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("2,2,1").conjugate(), p("3,2"));
        assert_eq!(p("5").conjugate(), p("1,1,1,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..8 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "2,x".parse::<Partition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        match "1,2".parse::<Partition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("2,0".parse::<Partition>().is_err());
        assert!("1,2".parse::<Bicomposition>().is_err());
        assert!("1|2|3".parse::<Bicomposition>().is_err());
        let t = ab("|3,2,2");
        assert!(t.alpha.is_empty());
        assert_eq!(t.beta.parts(), &[3, 2, 2]);
        assert_eq!(t.to_string(), "|3,2,2");
    }

    #[test]
    fn initial_tableaux() {
        assert_eq!(NumericTableau::initial(&p("2,1")).to_string(), "1,2/3");
        assert_eq!(NumericTableau::initial(&p("1,1,1")).to_string(), "1/2/3");
        assert_eq!(NumericTableau::initial(&p("3")).to_string(), "1,2,3");
        let t = NumericTableau::parse("1,7/2/3/4/5/6").unwrap();
        assert_eq!(t.shape(), &p("2,1,1,1,1,1"));
        assert!(NumericTableau::parse("1,1/2").is_err());
    }

    #[test]
    fn standard_tableaux() {
        let two_one: Vec<String> = enumerate_standard_tableaux(&p("2,1"))
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(two_one, ["1,2/3", "1,3/2"]);
        // hook lengths of (2,1^5): 7,5,4,3,2,1 and 1
        assert_eq!(enumerate_standard_tableaux(&p("2,1,1,1,1,1")).len(), 6);
        assert_eq!(enumerate_standard_tableaux(&p("1,1,1,1")).len(), 1);
        assert!(enumerate_standard_tableaux(&p("3,2")).iter().all(|t| t.is_standard()));
    }

    #[test]
    fn color_tableaux_counts() {
        assert_eq!(
            enumerate_color_tableaux(&Partition::empty(), &ab("|")).unwrap().len(),
            1
        );
        assert_eq!(enumerate_color_tableaux(&p("1,1"), &ab("1|1")).unwrap().len(), 2);
        assert_eq!(enumerate_color_tableaux(&p("2,1"), &ab("2,1|")).unwrap().len(), 3);
        assert!(matches!(
            enumerate_color_tableaux(&p("2,1"), &ab("2|")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn signed_semistandard_examples() {
        // λ = (2,2,1), type ((2)|(2,1))
        let t1 = c(&[&["c1", "c1"], &["d1", "d2"], &["d1"]]);
        let t2 = c(&[&["c1", "d1"], &["c1", "d2"], &["d1"]]);
        let t3 = c(&[&["c1", "d1"], &["c1", "d1"], &["d2"]]);
        let t4 = c(&[&["c1", "c1"], &["d1", "d1"], &["d2"]]);
        assert!(is_semistandard(&t1));
        assert!(!is_semistandard(&t2));
        assert!(!is_semistandard(&t3));
        assert!(!is_semistandard(&t4));
        assert_eq!(enumerate_semistandard(&p("2,2,1"), &ab("2|2,1")).unwrap(), vec![t1]);

        // λ = (2,1^4), type (∅|(2,2,2))
        let d = |k: &str| vec![k.parse::<Color>().unwrap()];
        let mut rows = vec![vec![Color::D(1), Color::D(1)]];
        rows.extend([d("d2"), d("d2"), d("d3"), d("d3")]);
        assert!(!is_semistandard(&ColorTableau::from_rows_unchecked(rows)));
        assert_eq!(
            enumerate_semistandard(&p("2,1,1,1,1"), &ab("|2,2,2")).unwrap().len(),
            2
        );
        assert_eq!(
            enumerate_semistandard(&p("2,1,1,1,1,1"), &ab("|3,2,2")).unwrap().len(),
            2
        );
        assert!(enumerate_semistandard(&p("2,1"), &ab("|3")).unwrap().is_empty());
        let row = enumerate_semistandard(&p("5"), &ab("5|")).unwrap();
        assert_eq!(row.len(), 1);
        assert!(row[0].word().iter().all(|&c| c == Color::C(1)));
    }

    #[test]
    fn backtracking_matches_filter() {
        for n in 0..=5 {
            for lam in enumerate_partitions(n) {
                for kind in enumerate_bicompositions(n) {
                    let filtered: Vec<_> = enumerate_color_tableaux(&lam, &kind)
                        .unwrap()
                        .into_iter()
                        .filter(is_semistandard)
                        .collect();
                    assert_eq!(filtered, enumerate_semistandard(&lam, &kind).unwrap());
                }
            }
        }
    }

    #[test]
    fn color_order() {
        assert!(Color::C(1) < Color::C(2));
        assert!(Color::C(9) < Color::D(1));
        assert!(Color::D(1) < Color::D(2));
        assert_eq!(Color::D(3).to_string(), "d3");
        assert_eq!("c2".parse::<Color>().unwrap(), Color::C(2));
    }

    #[test]
    fn bicomposition_counts() {
        // 2^(n-1) compositions of n >= 1
        assert_eq!(enumerate_compositions(5).len(), 16);
        assert_eq!(enumerate_bicompositions(5).len(), 64);
        assert_eq!(enumerate_bicompositions(6).len(), 144);
        assert_eq!(young_index(&ab("3|3")), 20);
        assert_eq!(young_index(&ab("|3,2,2")), 210);
    }
}
