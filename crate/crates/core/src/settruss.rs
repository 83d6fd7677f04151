//! Skew trusses on finite sets, their enumeration over a fixed group, and the
//! passage to and from Hopf trusses (linearization and grouplikes).

use itertools::Itertools;
use rayon::prelude::*;

use crate::coalgebra::{grouplikes, ComonoidData, GrouplikeMode};
use crate::error::{shape, AlgebraError, Result};
use crate::field::Field;
use crate::hopftruss::{verify_truss_morphism, HopfTruss};
use crate::linalg::LinMap;
use crate::report::{Residual, VerificationReport};

/// Default largest group order accepted by [`enumerate_skew_trusses`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 4;

/// Cayley table of a binary operation on `{0, .., n-1}`.
pub type Table = Vec<Vec<usize>>;

fn check_table(what: &'static str, table: &Table) -> Result<usize> {
    let n = table.len();
    for row in table {
        if row.len() != n {
            return Err(shape(
                what,
                format!("row of length {} in a {n}-element table", row.len()),
            ));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(shape(what, format!("entry {x} out of range for {n} elements")));
        }
    }
    Ok(n)
}

fn first_non_associative(table: &Table) -> Option<[usize; 3]> {
    let n = table.len();
    (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
        .find(|&[a, b, c]| table[table[a][b]][c] != table[a][table[b][c]])
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroup {
    pub table: Table,
    pub unit: usize,
    pub inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table and derives its unit and inverses.
    pub fn from_table(table: Table) -> Result<Self> {
        let n = check_table("group table", &table)?;
        if n == 0 {
            return Err(AlgebraError::Invalid("a group has at least one element".into()));
        }
        if let Some(w) = first_non_associative(&table) {
            return Err(AlgebraError::Invalid(format!(
                "group table is not associative at {w:?}"
            )));
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| AlgebraError::Invalid("group table has no unit".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == unit && table[b][a] == unit)
                    .ok_or_else(|| AlgebraError::Invalid(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { table, unit, inv })
    }

    /// Like [`FiniteGroup::from_table`] but only checks shapes; a missing unit
    /// or inverse defaults to 0 and is reported by [`verify_skew_truss`].
    pub fn from_table_unchecked(table: Table) -> Result<Self> {
        let n = check_table("group table", &table)?;
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .unwrap_or(0);
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == unit && table[b][a] == unit)
                    .unwrap_or(0)
            })
            .collect();
        Ok(FiniteGroup { table, unit, inv })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::Invalid("Z0 is not a finite group".into()));
        }
        Self::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// The symmetric group on three letters. Elements are the permutations of
    /// `[0, 1, 2]` in lexicographic order (so the identity is 0), composed as
    /// `(a·b)(x) = a(b(x))`.
    pub fn symmetric3() -> Self {
        let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&[a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Self::from_table(table).expect("S3 is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// All group endomorphisms, as images of `0..n`, in lexicographic order.
    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .filter(|f| (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == self.op(f[a], f[b]))))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSemigroup {
    pub table: Table,
}

impl FiniteSemigroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTruss {
    pub group: FiniteGroup,
    pub semigroup: FiniteSemigroup,
    /// The cocycle `ω(a) = a ⋄₂ 1`, stored so inconsistent inputs are caught.
    pub omega: Vec<usize>,
}

impl SkewTruss {
    /// Builds a truss with its cocycle derived from the tables.
    pub fn new(group: FiniteGroup, semigroup: Table) -> Result<Self> {
        let semigroup = FiniteSemigroup { table: semigroup };
        let omega = derive_omega(&group, &semigroup)?;
        Ok(SkewTruss {
            group,
            semigroup,
            omega,
        })
    }

    /// `a ⋄₂ b = a ⋄₁ b`.
    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::new(group.clone(), group.table.clone()).expect("shapes agree")
    }

    /// `a ⋄₂ b = a`.
    pub fn left_projection(group: &FiniteGroup) -> Self {
        let n = group.order();
        Self::new(group.clone(), (0..n).map(|a| vec![a; n]).collect()).expect("shapes agree")
    }

    /// `a ⋄₂ b = b`.
    pub fn right_projection(group: &FiniteGroup) -> Self {
        let n = group.order();
        Self::new(group.clone(), (0..n).map(|_| (0..n).collect()).collect()).expect("shapes agree")
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    fn check_shapes(&self) -> Result<()> {
        let n = check_table("group table", &self.group.table)?;
        if check_table("semigroup table", &self.semigroup.table)? != n {
            return Err(shape("skew truss", "group and semigroup sizes differ"));
        }
        if self.group.unit >= n.max(1) || self.group.inv.len() != n || self.omega.len() != n {
            return Err(shape("skew truss", "unit, inverse or cocycle has the wrong size"));
        }
        if self.group.inv.iter().chain(&self.omega).any(|&x| x >= n) {
            return Err(shape("skew truss", "index out of range"));
        }
        Ok(())
    }

    /// Relabels every element `a` as `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order();
        let mut inverse = vec![0; n];
        for (a, &p) in perm.iter().enumerate() {
            inverse[p] = a;
        }
        let table = |t: &Table| -> Table {
            (0..n)
                .map(|x| (0..n).map(|y| perm[t[inverse[x]][inverse[y]]]).collect())
                .collect()
        };
        SkewTruss {
            group: FiniteGroup {
                table: table(&self.group.table),
                unit: perm[self.group.unit],
                inv: (0..n).map(|x| perm[self.group.inv[inverse[x]]]).collect(),
            },
            semigroup: FiniteSemigroup {
                table: table(&self.semigroup.table),
            },
            omega: (0..n).map(|x| perm[self.omega[inverse[x]]]).collect(),
        }
    }

    /// The lexicographically least relabeling, used to compare trusses up to
    /// isomorphism. Costs `n!` relabelings.
    pub fn canonical_form(&self) -> Self {
        let n = self.order();
        (0..n)
            .permutations(n)
            .map(|p| self.relabel(&p))
            .min_by(|x, y| (&x.group.table, &x.semigroup.table).cmp(&(&y.group.table, &y.semigroup.table)))
            .expect("at least one permutation")
    }
}

/// `ω(a) = a ⋄₂ 1`.
pub fn derive_omega(group: &FiniteGroup, semigroup: &FiniteSemigroup) -> Result<Vec<usize>> {
    let n = check_table("semigroup table", &semigroup.table)?;
    if n != group.order() || group.unit >= n {
        return Err(shape("derive_omega", "group and semigroup sizes differ"));
    }
    Ok((0..n).map(|a| semigroup.op(a, group.unit)).collect())
}

fn witness_check(r: &mut VerificationReport, name: &str, anchor: &str, witness: Option<Vec<usize>>) {
    let pass = witness.is_none();
    r.record(name, anchor, pass, witness.map(Residual::Witness));
}

/// `a ⋄₂ (b ⋄₁ c) = (a ⋄₂ b) ⋄₁ ω(a)⁻¹ ⋄₁ (a ⋄₂ c)`.
fn dia_dia_holds(g: &FiniteGroup, s: &FiniteSemigroup, omega: &[usize], a: usize, b: usize, c: usize) -> bool {
    s.op(a, g.op(b, c)) == g.op(g.op(s.op(a, b), g.inv[omega[a]]), s.op(a, c))
}

pub fn verify_skew_truss(t: &SkewTruss) -> Result<VerificationReport> {
    t.check_shapes()?;
    let (g, s, n) = (&t.group, &t.semigroup, t.order());
    let mut r = VerificationReport::new();
    witness_check(
        &mut r,
        "group.associative",
        "Def.group",
        first_non_associative(&g.table).map(Vec::from),
    );
    witness_check(
        &mut r,
        "group.unit",
        "Def.group",
        (0..n)
            .find(|&a| g.op(g.unit, a) != a || g.op(a, g.unit) != a)
            .map(|a| vec![a]),
    );
    witness_check(
        &mut r,
        "group.inverse",
        "Def.group",
        (0..n)
            .find(|&a| g.op(a, g.inv[a]) != g.unit || g.op(g.inv[a], a) != g.unit)
            .map(|a| vec![a]),
    );
    witness_check(
        &mut r,
        "semigroup.associative",
        "Def.semigroup",
        first_non_associative(&s.table).map(Vec::from),
    );
    let triple = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| !dia_dia_holds(g, s, &t.omega, a, b, c));
    witness_check(&mut r, "dia_dia", "Eq.(dia-dia)", triple.map(|(a, b, c)| vec![a, b, c]));
    witness_check(
        &mut r,
        "omega_derived",
        "Eq.(cocycle)",
        (0..n).find(|&a| t.omega[a] != s.op(a, g.unit)).map(|a| vec![a]),
    );
    Ok(r)
}

/// Every skew truss with the given additive group, ordered by semigroup table.
///
/// A row `b ↦ a ⋄₂ b` satisfies the distributive law exactly when it has the
/// form `b ↦ w ⋄₁ f(b)` for some `w` and group endomorphism `f` (then
/// `w = ω(a)`), so the search runs over such rows and only associativity of
/// `⋄₂` remains to be checked.
pub fn enumerate_skew_trusses(group: &FiniteGroup, bound: usize) -> Result<Vec<SkewTruss>> {
    let n = group.order();
    if n > bound {
        return Err(AlgebraError::BoundExceeded(format!(
            "group of order {n} exceeds enumeration bound {bound}"
        )));
    }
    let endos = group.endomorphisms();
    let rows: Vec<Vec<usize>> = (0..n)
        .flat_map(|w| endos.iter().map(move |f| f.iter().map(|&x| group.op(w, x)).collect()))
        .collect();
    let mut tables: Vec<Table> = rows
        .par_iter()
        .flat_map_iter(|first| {
            let mut partial = vec![first.clone()];
            let mut found = Vec::new();
            if rows_associative(&partial) {
                extend(&rows, n, &mut partial, &mut found);
            }
            found
        })
        .collect();
    tables.sort();
    tables
        .into_iter()
        .map(|table| SkewTruss::new(group.clone(), table))
        .collect()
}

fn extend(rows: &[Vec<usize>], n: usize, partial: &mut Table, found: &mut Vec<Table>) {
    if partial.len() == n {
        found.push(partial.clone());
        return;
    }
    for row in rows {
        partial.push(row.clone());
        if rows_associative(partial) {
            extend(rows, n, partial, found);
        }
        partial.pop();
    }
}

/// Associativity `(x⋄y)⋄z = x⋄(y⋄z)` on every triple whose three needed rows
/// (`x`, `y`, `x⋄y`) are filled and include the newest row.
fn rows_associative(partial: &Table) -> bool {
    let last = partial.len() - 1;
    let n = partial[0].len();
    for x in 0..=last {
        for y in 0..=last {
            let xy = partial[x][y];
            if xy > last || (x != last && y != last && xy != last) {
                continue;
            }
            for z in 0..n {
                if partial[xy][z] != partial[x][partial[y][z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// The Hopf truss spanned by the elements of `t`: every structure map is the
/// 0/1 matrix of the corresponding table or function.
pub fn linearize<K: Field>(t: &SkewTruss, ctx: &K::Ctx) -> Result<HopfTruss<K>> {
    let report = verify_skew_truss(t)?;
    if !report.passed() {
        return Err(AlgebraError::Invalid("cannot linearize an invalid skew truss".into()));
    }
    let n = t.order();
    let one = K::one(ctx);
    let table_map = |table: &Table| {
        let mut m = LinMap::zero(ctx, n, n * n);
        for (a, row) in table.iter().enumerate() {
            for (b, &ab) in row.iter().enumerate() {
                m.set(ab, a * n + b, one.clone());
            }
        }
        m
    };
    let function_map = |f: &[usize]| {
        let mut m = LinMap::zero(ctx, n, n);
        for (a, &fa) in f.iter().enumerate() {
            m.set(fa, a, one.clone());
        }
        m
    };
    HopfTruss::new(
        ComonoidData::grouplike(ctx, n),
        LinMap::basis_vector(ctx, n, t.group.unit),
        table_map(&t.group.table),
        table_map(&t.semigroup.table),
        function_map(&t.group.inv),
        function_map(&t.omega),
    )
}

/// Reads a skew truss off the grouplikes of `h`, labelled in the order the
/// extraction returns them.
pub fn truss_of_grouplikes<K: Field>(h: &HopfTruss<K>, mode: GrouplikeMode) -> Result<SkewTruss> {
    h.check_shapes()?;
    let g = grouplikes(&h.comonoid, mode)?;
    if !g.complete {
        return Err(AlgebraError::IncompleteGrouplikes);
    }
    let elems = &g.vectors;
    let n = elems.len();
    let index =
        |v: &LinMap<K>, what: &'static str| elems.iter().position(|e| e == v).ok_or(AlgebraError::NotClosed(what));
    let table = |mu: &LinMap<K>, what: &'static str| -> Result<Table> {
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| index(&(mu * &elems[a].tensor(&elems[b])), what))
                    .collect()
            })
            .collect()
    };
    let group = FiniteGroup::from_table(table(&h.mu1, "mu1")?)?;
    if index(&h.eta, "eta")? != group.unit {
        return Err(AlgebraError::Invalid("unit of mu1 is not the image of eta".into()));
    }
    let semigroup = FiniteSemigroup {
        table: table(&h.mu2, "mu2")?,
    };
    let omega = elems
        .iter()
        .map(|e| index(&(&h.sigma * e), "sigma"))
        .collect::<Result<Vec<_>>>()?;
    Ok(SkewTruss {
        group,
        semigroup,
        omega,
    })
}

/// Observes the counit `linearize(truss_of_grouplikes(h)) → h`, sending each
/// basis element to its grouplike. The map is always a truss morphism; whether
/// it is invertible is only flagged, since it need not be.
pub fn counit_report<K: Field>(h: &HopfTruss<K>, mode: GrouplikeMode) -> Result<VerificationReport> {
    let t = truss_of_grouplikes(h, mode)?;
    let g = grouplikes(&h.comonoid, mode)?;
    let counit = LinMap::from_fn(h.ctx(), h.dim(), g.vectors.len(), |i, j| g.vectors[j].get(i, 0).clone());
    let mut r = VerificationReport::new();
    r.absorb("counit.", verify_truss_morphism(&counit, &linearize(&t, h.ctx())?, h)?);
    let rank = counit.rank();
    r.flag("counit_injective", rank == counit.dom());
    r.flag("counit_iso", rank == counit.dom() && rank == counit.cod());
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMorphism {
    pub src: usize,
    pub dst: usize,
    pub map: Vec<usize>,
}

impl SetMorphism {
    pub fn identity(n: usize) -> Self {
        SetMorphism {
            src: n,
            dst: n,
            map: (0..n).collect(),
        }
    }

    /// The 0/1 matrix sending basis vector `a` to basis vector `f(a)`.
    pub fn linearize<K: Field>(&self, ctx: &K::Ctx) -> LinMap<K> {
        let mut m = LinMap::zero(ctx, self.dst, self.src);
        for (a, &fa) in self.map.iter().enumerate() {
            m.set(fa, a, K::one(ctx));
        }
        m
    }
}

/// Group and semigroup homomorphism laws, plus the implied `ω∘f = f∘ω`.
pub fn verify_set_morphism(f: &SetMorphism, src: &SkewTruss, dst: &SkewTruss) -> Result<VerificationReport> {
    src.check_shapes()?;
    dst.check_shapes()?;
    if f.src != src.order() || f.dst != dst.order() || f.map.len() != f.src || f.map.iter().any(|&x| x >= f.dst) {
        return Err(shape("set morphism", "map does not fit source and target"));
    }
    let n = src.order();
    let m = &f.map;
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let mut r = VerificationReport::new();
    witness_check(
        &mut r,
        "group_hom",
        "Def.skew-truss-morphism",
        pairs()
            .find(|&(a, b)| m[src.group.op(a, b)] != dst.group.op(m[a], m[b]))
            .map(|(a, b)| vec![a, b]),
    );
    witness_check(
        &mut r,
        "semigroup_hom",
        "Def.skew-truss-morphism",
        pairs()
            .find(|&(a, b)| m[src.semigroup.op(a, b)] != dst.semigroup.op(m[a], m[b]))
            .map(|(a, b)| vec![a, b]),
    );
    witness_check(
        &mut r,
        "omega_intertwining",
        "Def.skew-truss-morphism",
        (0..n).find(|&a| dst.omega[m[a]] != m[src.omega[a]]).map(|a| vec![a]),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::HopfMonoidData;
    use crate::field::{Fp, Rational};
    use crate::hopftruss::verify_hopf_truss;

    #[test]
    fn named_trusses_pass() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        for t in [
            SkewTruss::trivial(&z3),
            SkewTruss::left_projection(&z3),
            SkewTruss::right_projection(&z3),
        ] {
            assert!(verify_skew_truss(&t).unwrap().passed());
        }
    }

    #[test]
    fn omega_of_named_trusses() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(SkewTruss::trivial(&z3).omega, vec![0, 1, 2]);
        assert_eq!(SkewTruss::left_projection(&z3).omega, vec![0, 1, 2]);
        assert_eq!(SkewTruss::right_projection(&z3).omega, vec![0, 0, 0]);
    }

    #[test]
    fn distributivity_violation_has_witness() {
        // Every self-map of Z/2 is affine, so use Z/3 with every row equal to
        // g = (0, 0, 1), which is not affine.
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let t = SkewTruss::new(z3, vec![vec![0, 0, 1]; 3]).unwrap();
        let r = verify_skew_truss(&t).unwrap();
        let c = r.get("dia_dia").unwrap();
        assert!(!c.pass);
        // First failure in lexicographic order: g(1+1) = 1 but g(1) + g(1) = 0.
        assert_eq!(c.residual, Some(Residual::Witness(vec![0, 1, 1])));
    }

    #[test]
    fn inconsistent_omega_is_reported() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let mut t = SkewTruss::trivial(&z2);
        t.omega = vec![1, 1];
        let r = verify_skew_truss(&t).unwrap();
        assert!(r.fails_anchor("Eq.(cocycle)"));
    }

    #[test]
    fn s3_is_a_nonabelian_group() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.unit, 0);
        assert!((0..6).any(|a| (0..6).any(|b| s3.op(a, b) != s3.op(b, a))));
        // Trivial, three through the sign map onto each order-2 subgroup, and six automorphisms.
        assert_eq!(s3.endomorphisms().len(), 10);
    }

    #[test]
    fn endomorphisms_of_cyclic_groups() {
        assert_eq!(FiniteGroup::cyclic(4).unwrap().endomorphisms().len(), 4);
        assert_eq!(FiniteGroup::cyclic(1).unwrap().endomorphisms(), vec![vec![0]]);
    }

    #[test]
    fn enumeration_contains_named_trusses_and_is_sorted() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let all = enumerate_skew_trusses(&z2, DEFAULT_ENUMERATION_BOUND).unwrap();
        for t in [
            SkewTruss::trivial(&z2),
            SkewTruss::left_projection(&z2),
            SkewTruss::right_projection(&z2),
        ] {
            assert!(all.contains(&t));
        }
        assert!(all.windows(2).all(|w| w[0].semigroup.table < w[1].semigroup.table));
        assert!(all.iter().all(|t| verify_skew_truss(t).unwrap().passed()));
        assert_eq!(
            enumerate_skew_trusses(&FiniteGroup::cyclic(1).unwrap(), 4)
                .unwrap()
                .len(),
            1
        );
        assert!(matches!(
            enumerate_skew_trusses(&FiniteGroup::cyclic(5).unwrap(), 4),
            Err(AlgebraError::BoundExceeded(_))
        ));
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let t = SkewTruss::right_projection(&z3);
        let moved = t.relabel(&[2, 0, 1]);
        assert_ne!(moved, t);
        assert!(verify_skew_truss(&moved).unwrap().passed());
        assert_eq!(moved.canonical_form(), t.canonical_form());
    }

    #[test]
    fn linearized_right_projection() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = linearize::<Rational>(&SkewTruss::right_projection(&z2), &()).unwrap();
        assert_eq!(h.sigma, LinMap::from_i64_rows(&(), &[&[1, 1], &[0, 0]]));
        assert!(verify_hopf_truss(&h).unwrap().passed());
    }

    #[test]
    fn linearization_rejects_invalid_truss() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let mut t = SkewTruss::trivial(&z2);
        t.omega = vec![1, 0];
        assert!(linearize::<Rational>(&t, &()).is_err());
    }

    #[test]
    fn grouplikes_round_trip_and_closure() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let t = SkewTruss::left_projection(&z3);
        let mut h = linearize::<Rational>(&t, &()).unwrap();
        assert_eq!(truss_of_grouplikes(&h, GrouplikeMode::BasisScan).unwrap(), t);
        h.mu2.set(0, 0, Rational::from_i64(&(), 2));
        assert_eq!(
            truss_of_grouplikes(&h, GrouplikeMode::BasisScan),
            Err(AlgebraError::NotClosed("mu2"))
        );
    }

    #[test]
    fn counit_is_iso_on_linearizations_only() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let h = linearize::<Rational>(&SkewTruss::right_projection(&z3), &()).unwrap();
        let r = counit_report(&h, GrouplikeMode::BasisScan).unwrap();
        assert!(r.passed());
        assert_eq!(r.flags.get("counit_iso"), Some(&true));

        // Functions on Z3 over F5: the only character Z3 -> F5* is trivial,
        // so a single grouplike spans a line in a 3-dimensional truss.
        let ctx = 5u64;
        let one = || Fp::from_i64(&ctx, 1);
        let mut delta = LinMap::zero(&ctx, 9, 3);
        let mut mu = LinMap::zero(&ctx, 3, 9);
        for a in 0..3 {
            for b in 0..3 {
                delta.set(a * 3 + b, (a + b) % 3, one());
            }
            mu.set(a, a * 3 + a, one());
        }
        let epsilon = LinMap::from_fn(&ctx, 1, 3, |_, g| if g == 0 { one() } else { Fp::from_i64(&ctx, 0) });
        let eta = LinMap::from_fn(&ctx, 3, 1, |_, _| one());
        let lambda = LinMap::from_fn(
            &ctx,
            3,
            3,
            |i, j| if (i + j) % 3 == 0 { one() } else { Fp::from_i64(&ctx, 0) },
        );
        let hopf = HopfMonoidData::new(ComonoidData::new(delta, epsilon).unwrap(), eta, mu, lambda).unwrap();
        let h = HopfTruss::brace_of(&hopf);
        assert!(verify_hopf_truss(&h).unwrap().passed());
        let mode = GrouplikeMode::ExhaustiveFp {
            bound: GrouplikeMode::DEFAULT_EXHAUSTIVE_BOUND,
        };
        let r = counit_report(&h, mode).unwrap();
        assert!(r.passed());
        assert_eq!(r.flags.get("counit_injective"), Some(&true));
        assert_eq!(r.flags.get("counit_iso"), Some(&false));
    }

    #[test]
    fn set_morphisms_on_z2() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let t = SkewTruss::trivial(&z2);
        assert!(verify_set_morphism(&SetMorphism::identity(2), &t, &t).unwrap().passed());
        let one = SkewTruss::trivial(&FiniteGroup::cyclic(1).unwrap());
        let to_unit = SetMorphism {
            src: 2,
            dst: 1,
            map: vec![0, 0],
        };
        assert!(verify_set_morphism(&to_unit, &t, &one).unwrap().passed());
        let constant_one = SetMorphism {
            src: 2,
            dst: 2,
            map: vec![1, 1],
        };
        assert!(!verify_set_morphism(&constant_one, &t, &t).unwrap().passed());
    }
}
