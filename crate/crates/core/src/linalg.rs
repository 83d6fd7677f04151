//! Exact linear algebra on sparse matrices.
//!
//! A [`LinMap`] is a `cod × dom` matrix; entry `(i, j)` is the coefficient of
//! codomain basis vector `i` in the image of domain basis vector `j`. Tensor
//! products use left-major flat indices: `e_i ⊗ e_j` sits at `i * n + j` where
//! `n` is the dimension of the right factor. The unit object is dimension 1,
//! so tensoring with it never changes a flat index.
//!
//! Rows store only their nonzero entries, sorted by column. Structure maps of
//! finite algebras have few nonzeros per column, so composites over threefold
//! tensor powers stay cheap even though the matrices are large.
//!
//! Elimination always picks the leftmost available column and, within it, the
//! first row holding a nonzero entry, so bases returned by [`LinMap::nullspace`]
//! and [`LinMap::split_idempotent`] are reproducible.

use std::fmt;
use std::ops::Mul;

use crate::error::{shape, AlgebraError, Result};
use crate::field::Field;

type SparseRow<K> = Vec<(usize, K)>;

#[derive(Clone, PartialEq, Eq)]
pub struct LinMap<K: Field> {
    ctx: K::Ctx,
    cod: usize,
    dom: usize,
    rows: Vec<SparseRow<K>>,
    /// Returned by reference for entries that are not stored.
    zero: K,
}

impl<K: Field> fmt::Debug for LinMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} over {}", self.cod, self.dom, K::spec(&self.ctx))?;
        for i in 0..self.cod {
            let row: Vec<String> = (0..self.dom).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn sparse<K: Field>(dense: impl IntoIterator<Item = K>) -> SparseRow<K> {
    dense.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
}

impl<K: Field> LinMap<K> {
    fn from_sparse(ctx: &K::Ctx, cod: usize, dom: usize, rows: Vec<SparseRow<K>>) -> Self {
        LinMap {
            ctx: ctx.clone(),
            cod,
            dom,
            rows,
            zero: K::zero(ctx),
        }
    }

    pub fn zero(ctx: &K::Ctx, cod: usize, dom: usize) -> Self {
        Self::from_sparse(ctx, cod, dom, vec![Vec::new(); cod])
    }

    pub fn identity(ctx: &K::Ctx, n: usize) -> Self {
        Self::from_sparse(ctx, n, n, (0..n).map(|i| vec![(i, K::one(ctx))]).collect())
    }

    pub fn from_fn(ctx: &K::Ctx, cod: usize, dom: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let rows = (0..cod).map(|i| sparse((0..dom).map(|j| f(i, j)))).collect();
        Self::from_sparse(ctx, cod, dom, rows)
    }

    /// Builds a map from row-major data of length `cod * dom`.
    pub fn from_vec(ctx: &K::Ctx, cod: usize, dom: usize, data: Vec<K>) -> Result<Self> {
        if data.len() != cod * dom {
            return Err(shape(
                "from_vec",
                format!("{} entries for a {cod}x{dom} matrix", data.len()),
            ));
        }
        let mut it = data.into_iter();
        let rows = (0..cod).map(|_| sparse(it.by_ref().take(dom))).collect();
        Ok(Self::from_sparse(ctx, cod, dom, rows))
    }

    /// Builds a map from rows; `dom` is needed to shape maps with no rows.
    pub fn from_rows(ctx: &K::Ctx, dom: usize, rows: Vec<Vec<K>>) -> Result<Self> {
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != dom) {
            return Err(shape(
                "from_rows",
                format!("row {i} has {} entries, expected {dom}", row.len()),
            ));
        }
        let cod = rows.len();
        Ok(Self::from_sparse(ctx, cod, dom, rows.into_iter().map(sparse).collect()))
    }

    /// Integer-entry convenience constructor, mostly for fixtures.
    pub fn from_i64_rows(ctx: &K::Ctx, rows: &[&[i64]]) -> Self {
        let dom = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| K::from_i64(ctx, v)).collect())
            .collect();
        Self::from_rows(ctx, dom, rows).expect("ragged integer rows")
    }

    /// The map whose `j`-th column is `cols[j]`.
    pub fn from_columns(ctx: &K::Ctx, cod: usize, cols: &[Vec<K>]) -> Result<Self> {
        if let Some((j, c)) = cols.iter().enumerate().find(|(_, c)| c.len() != cod) {
            return Err(shape(
                "from_columns",
                format!("column {j} has {} entries, expected {cod}", c.len()),
            ));
        }
        Ok(Self::from_fn(ctx, cod, cols.len(), |i, j| cols[j][i].clone()))
    }

    /// The `n × 1` map picking out basis vector `i`.
    pub fn basis_vector(ctx: &K::Ctx, n: usize, i: usize) -> Self {
        let mut m = Self::zero(ctx, n, 1);
        m.set(i, 0, K::one(ctx));
        m
    }

    /// The `m·n × m·n` braiding of the symmetric category of vector spaces:
    /// flat index `i·n + j` of `M ⊗ N` goes to `j·m + i` of `N ⊗ M`.
    pub fn swap(ctx: &K::Ctx, m: usize, n: usize) -> Self {
        // Row `j·m + i` holds a single 1 in column `i·n + j`.
        let rows = (0..n)
            .flat_map(|j| (0..m).map(move |i| vec![(i * n + j, K::one(ctx))]))
            .collect();
        Self::from_sparse(ctx, m * n, m * n, rows)
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.cod, self.dom)
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        assert!(
            i < self.cod && j < self.dom,
            "entry ({i}, {j}) outside {}x{}",
            self.cod,
            self.dom
        );
        let row = &self.rows[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => &row[pos].1,
            Err(_) => &self.zero,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        assert!(
            i < self.cod && j < self.dom,
            "entry ({i}, {j}) outside {}x{}",
            self.cod,
            self.dom
        );
        let row = &mut self.rows[i];
        match (row.binary_search_by_key(&j, |e| e.0), v.is_zero()) {
            (Ok(pos), true) => {
                row.remove(pos);
            }
            (Ok(pos), false) => row[pos].1 = v,
            (Err(pos), false) => row.insert(pos, (j, v)),
            (Err(_), true) => {}
        }
    }

    /// Row `i` as a dense vector.
    pub fn row(&self, i: usize) -> Vec<K> {
        let mut out = vec![self.zero.clone(); self.dom];
        for (j, v) in &self.rows[i] {
            out[*j] = v.clone();
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.cod).map(|i| self.get(i, j).clone()).collect()
    }

    /// All entries, dense and row-major.
    pub fn entries(&self) -> Vec<K> {
        (0..self.cod).flat_map(|i| self.row(i)).collect()
    }

    /// Nonzero entries `(i, j, v)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &K)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, row)| matches!(row.as_slice(), [(j, v)] if *j == i && v.is_one()))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(AlgebraError::FieldMismatch {
                expected: K::spec(&self.ctx),
                found: K::spec(&other.ctx),
            });
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Self) -> Result<Self> {
        self.same_field(f)?;
        if self.dom != f.cod {
            return Err(shape(
                "compose",
                format!(
                    "outer map is {}x{}, inner map is {}x{}",
                    self.cod, self.dom, f.cod, f.dom
                ),
            ));
        }
        Ok(self.compose_unchecked(f))
    }

    fn compose_unchecked(&self, f: &Self) -> Self {
        let mut acc: Vec<Option<K>> = vec![None; f.dom];
        let mut touched = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    let a_one = a.is_one();
                    for (j, b) in &f.rows[*k] {
                        let term = if a_one { b.clone() } else { a.mul(b) };
                        match &mut acc[*j] {
                            Some(s) => *s = s.add(&term),
                            slot @ None => {
                                *slot = Some(term);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().filter(|v| !v.is_zero()).map(|v| (j, v)))
                    .collect();
                out
            })
            .collect();
        Self::from_sparse(&self.ctx, self.cod, f.dom, rows)
    }

    /// Kronecker product `self ⊗ g` in left-major order.
    pub fn kron(&self, g: &Self) -> Result<Self> {
        self.same_field(g)?;
        Ok(self.tensor(g))
    }

    /// Infallible Kronecker product. Panics if the fields differ; callers
    /// inside the crate validate fields when bundles are constructed.
    pub fn tensor(&self, g: &Self) -> Self {
        assert!(self.ctx == g.ctx, "tensor product across different fields");
        let rows = self
            .rows
            .iter()
            .flat_map(|r1| {
                g.rows.iter().map(move |r2| {
                    r1.iter()
                        .flat_map(|(j1, a)| r2.iter().map(move |(j2, b)| (j1 * g.dom + j2, a.mul(b))))
                        .collect()
                })
            })
            .collect();
        Self::from_sparse(&self.ctx, self.cod * g.cod, self.dom * g.dom, rows)
    }

    fn zip(&self, other: &Self, op: &'static str, f: impl Fn(&K, &K) -> K) -> Result<Self> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(shape(op, format!("{:?} vs {:?}", self.shape(), other.shape())));
        }
        let z = &self.zero;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let (mut x, mut y) = (a.iter().peekable(), b.iter().peekable());
                let mut out = Vec::new();
                loop {
                    let entry = match (x.peek(), y.peek()) {
                        (Some((i, u)), Some((j, v))) if i == j => {
                            let e = (*i, f(u, v));
                            x.next();
                            y.next();
                            e
                        }
                        (Some((i, u)), Some((j, _))) if i < j => {
                            let e = (*i, f(u, z));
                            x.next();
                            e
                        }
                        (_, Some((j, v))) => {
                            let e = (*j, f(z, v));
                            y.next();
                            e
                        }
                        (Some((i, u)), None) => {
                            let e = (*i, f(u, z));
                            x.next();
                            e
                        }
                        (None, None) => break,
                    };
                    if !entry.1.is_zero() {
                        out.push(entry);
                    }
                }
                out
            })
            .collect();
        Ok(Self::from_sparse(&self.ctx, self.cod, self.dom, rows))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, "add", K::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, "sub", K::sub)
    }

    fn map_entries(&self, f: impl Fn(&K) -> K) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(j, v)| (*j, f(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Self::from_sparse(&self.ctx, self.cod, self.dom, rows)
    }

    pub fn scale(&self, s: &K) -> Self {
        self.map_entries(|v| v.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map_entries(K::neg)
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dom];
        for (i, j, v) in self.nonzeros() {
            rows[j].push((i, v.clone()));
        }
        Self::from_sparse(&self.ctx, self.dom, self.cod, rows)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m: Vec<Vec<K>> = (0..self.cod).map(|i| self.row(i)).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.dom {
            if r == self.cod {
                break;
            }
            let Some(p) = (r..self.cod).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let inv = m[r][c].inv().expect("pivot is nonzero");
            for x in &mut m[r][c..] {
                *x = x.mul(&inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for j in c..self.dom {
                    if !pivot_row[j].is_zero() {
                        row[j] = row[j].sub(&factor.mul(&pivot_row[j]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rows = m.into_iter().map(sparse).collect();
        (Self::from_sparse(&self.ctx, self.cod, self.dom, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self(x) = 0}`, one `dom × 1` vector per free column.
    pub fn nullspace(&self) -> Vec<Self> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.dom];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.dom).filter(|&c| !is_pivot[c]) {
            let mut v = Self::zero(&self.ctx, self.dom, 1);
            v.set(free, 0, K::one(&self.ctx));
            for (row, &p) in pivots.iter().enumerate() {
                v.set(p, 0, r.get(row, free).neg());
            }
            basis.push(v);
        }
        basis
    }

    /// The nullspace basis assembled as the columns of one `dom × k` map.
    pub fn kernel_map(&self) -> Self {
        let cols: Vec<Vec<K>> = self.nullspace().iter().map(|v| v.column(0)).collect();
        Self::from_columns(&self.ctx, self.dom, &cols).expect("columns share a length")
    }

    /// Reduced column-echelon basis of the image, as the columns of a map.
    pub fn image_map(&self) -> Self {
        let (r, pivots) = self.transpose().rref();
        let cols: Vec<Vec<K>> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Self::from_columns(&self.ctx, self.cod, &cols).expect("columns share a length")
    }

    /// Two-sided inverse of a square nonsingular map.
    pub fn invert(&self) -> Result<Self> {
        if self.cod != self.dom {
            return Err(AlgebraError::NotInvertible);
        }
        let n = self.cod;
        let aug = Self::from_fn(&self.ctx, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                K::one(&self.ctx)
            } else {
                K::zero(&self.ctx)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(Self::from_fn(&self.ctx, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Some `X` with `self ∘ X = rhs`, or `None` when the system is
    /// inconsistent. Free variables are set to zero, so the solution is the
    /// unique one whenever `self` is injective.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        self.same_field(rhs)?;
        if self.cod != rhs.cod {
            return Err(shape(
                "solve",
                format!("system has {} rows, right side has {}", self.cod, rhs.cod),
            ));
        }
        let (n, k) = (self.dom, rhs.dom);
        let aug = Self::from_fn(&self.ctx, self.cod, n + k, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - n).clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Self::zero(&self.ctx, n, k);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, r.get(row, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Splits an idempotent `q` as `q = i ∘ p` with `p ∘ i = id`. The image
    /// object has dimension `rank(q)` and `i` holds its reduced column-echelon
    /// basis.
    pub fn split_idempotent(&self) -> Result<(Self, Self)> {
        if self.cod != self.dom || &self.compose_unchecked(self) != self {
            return Err(AlgebraError::NotIdempotent);
        }
        let i = self.image_map();
        let p = i.solve(self)?.expect("an idempotent's columns lie in its image");
        Ok((p, i))
    }
}

impl<K: Field> Mul for &LinMap<K> {
    type Output = LinMap<K>;

    /// Composition `self ∘ rhs`. Panics on a shape mismatch; use
    /// [`LinMap::compose`] for the fallible form.
    fn mul(self, rhs: &LinMap<K>) -> LinMap<K> {
        assert!(
            self.dom == rhs.cod && self.ctx == rhs.ctx,
            "cannot compose {}x{} after {}x{}",
            self.cod,
            self.dom,
            rhs.cod,
            rhs.dom
        );
        self.compose_unchecked(rhs)
    }
}

impl<K: Field> Mul for LinMap<K> {
    type Output = LinMap<K>;

    fn mul(self, rhs: LinMap<K>) -> LinMap<K> {
        &self * &rhs
    }
}

impl<K: Field> Mul<&LinMap<K>> for LinMap<K> {
    type Output = LinMap<K>;

    fn mul(self, rhs: &LinMap<K>) -> LinMap<K> {
        &self * rhs
    }
}

impl<K: Field> Mul<LinMap<K>> for &LinMap<K> {
    type Output = LinMap<K>;

    fn mul(self, rhs: LinMap<K>) -> LinMap<K> {
        self * &rhs
    }
}

/// Left-nested tensor product of any number of factors.
pub fn tensor_all<K: Field>(factors: &[&LinMap<K>]) -> LinMap<K> {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, f| acc.tensor(f))
}
