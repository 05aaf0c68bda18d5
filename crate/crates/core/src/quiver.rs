//! Quiver representations with relations over `F_p`.
//!
//! This is the independent oracle: Hom and Ext¹ are solved as linear systems
//! and never consult arc combinatorics. Two presets are provided, `RA_n` and
//! the preprojective algebra of type D4.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brick::{Action, StringBrick};
use crate::error::{Error, Result};
use crate::field::{Field, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    /// `RA_n`: double quiver of `A_n` modulo all 2-cycles.
    RA(usize),
    /// Preprojective algebra of type D4 with central vertex 1.
    PiD4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of parallel paths; each path lists arrows in the
/// order they are traversed.
pub type Relation = Vec<(i64, Vec<usize>)>;

impl Algebra {
    pub fn vertices(&self) -> usize {
        match self {
            Algebra::RA(n) => *n,
            Algebra::PiD4 => 4,
        }
    }

    /// Number of simples, which is the rank of the Grothendieck group.
    pub fn rank(&self) -> usize {
        self.vertices()
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        match self {
            Algebra::RA(n) => {
                for i in 1..*n {
                    out.push(Arrow { name: format!("a{i}"), source: i, target: i + 1 });
                    out.push(Arrow { name: format!("a{i}*"), source: i + 1, target: i });
                }
            }
            Algebra::PiD4 => {
                for i in 2..=4 {
                    out.push(Arrow { name: format!("a{i}"), source: i, target: 1 });
                    out.push(Arrow { name: format!("a{i}*"), source: 1, target: i });
                }
            }
        }
        out
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows().iter().position(|a| a.name == name)
    }

    /// A generating set of the ideal. Arrow `2k` is unstarred, `2k + 1` starred.
    pub fn relations(&self) -> Vec<Relation> {
        let mut out = Vec::new();
        match self {
            Algebra::RA(n) => {
                for k in 0..n.saturating_sub(1) {
                    out.push(vec![(1, vec![2 * k, 2 * k + 1])]);
                    out.push(vec![(1, vec![2 * k + 1, 2 * k])]);
                }
            }
            Algebra::PiD4 => {
                // The 2-cycle through each leaf vanishes.
                for k in 0..3 {
                    out.push(vec![(1, vec![2 * k, 2 * k + 1])]);
                }
                // The three 2-cycles at the center sum to zero.
                out.push((0..3).map(|k| (1, vec![2 * k + 1, 2 * k])).collect());
            }
        }
        out
    }

    /// Longest chain of torsion classes, which bounds any run of left mutations.
    pub fn longest_chain(&self) -> usize {
        match self {
            Algebra::RA(n) => n * (n + 1) / 2,
            Algebra::PiD4 => 12,
        }
    }
}

/// A representation: a space `K^{dims[v]}` at each vertex and a matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    algebra: Algebra,
    field_char: u64,
    /// Indexed by vertex; entry 0 is unused and always 0.
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A morphism given by one matrix per vertex (entry 0 unused).
pub type Morphism = Vec<Matrix>;

/// An arrow index with the integer entries of its matrix.
type ArrowBlock = (usize, Vec<Vec<i64>>);

impl Representation {
    /// Checks shapes and relations.
    pub fn new(algebra: Algebra, field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let rep = Representation { algebra, field_char: field.characteristic(), dims, maps };
        rep.validate()?;
        Ok(rep)
    }

    pub fn zero(algebra: Algebra, field: Field) -> Self {
        let dims = vec![0; algebra.vertices() + 1];
        let maps = algebra.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { algebra, field_char: field.characteristic(), dims, maps }
    }

    pub fn simple(algebra: Algebra, field: Field, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertices() + 1];
        dims[v] = 1;
        let maps = algebra
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Representation { algebra, field_char: field.characteristic(), dims, maps }
    }

    fn validate(&self) -> Result<()> {
        let arrows = self.algebra.arrows();
        if self.dims.len() != self.algebra.vertices() + 1 || self.dims[0] != 0 {
            return Err(Error::InvalidRepresentation("wrong number of vertices".into()));
        }
        if self.maps.len() != arrows.len() {
            return Err(Error::InvalidRepresentation("wrong number of arrows".into()));
        }
        for (a, m) in arrows.iter().zip(&self.maps) {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::InvalidRepresentation(format!("arrow {} has wrong shape", a.name)));
            }
            if m.to_rows().iter().flatten().any(|&x| x >= self.field_char) {
                return Err(Error::InvalidRepresentation("entry not reduced".into()));
            }
        }
        let f = self.field();
        for (k, rel) in self.algebra.relations().iter().enumerate() {
            if !self.evaluate(&f, rel).is_zero() {
                return Err(Error::InvalidRepresentation(format!("relation {k} fails")));
            }
        }
        Ok(())
    }

    fn evaluate(&self, f: &Field, rel: &Relation) -> Matrix {
        let arrows = self.algebra.arrows();
        let first = &rel[0].1;
        let src = arrows[first[0]].source;
        let tgt = arrows[*first.last().expect("nonempty path")].target;
        let mut acc = Matrix::zeros(self.dims[tgt], self.dims[src]);
        for (c, path) in rel {
            let mut m = Matrix::identity(self.dims[src]);
            for &a in path {
                m = f.matmul(&self.maps[a], &m);
            }
            acc = f.matadd(&acc, &f.scale(f.reduce(*c), &m));
        }
        acc
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn field(&self) -> Field {
        Field::new(self.field_char).expect("validated at construction")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// The same representation over another field. Entries are read as integers,
    /// so this is only meaningful for 0/±1 matrices.
    pub fn with_field(&self, field: Field) -> Result<Self> {
        let p = self.field_char;
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let rows: Vec<Vec<u64>> = m
                    .to_rows()
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&x| {
                                let signed = if x > p / 2 { x as i64 - p as i64 } else { x as i64 };
                                field.reduce(signed)
                            })
                            .collect()
                    })
                    .collect();
                Matrix::from_rows(m.rows(), m.cols(), &rows).expect("same shape")
            })
            .collect();
        Representation::new(self.algebra, field, self.dims.clone(), maps)
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| block_diag(&[a.clone(), b.clone()]))
            .collect();
        Representation { algebra: self.algebra, field_char: self.field_char, dims, maps }
    }

    pub fn power(&self, e: usize) -> Representation {
        let mut out = Representation::zero(self.algebra, self.field());
        for _ in 0..e {
            out = out.direct_sum(self);
        }
        out
    }
}

fn block_diag(parts: &[Matrix]) -> Matrix {
    let rows = parts.iter().map(Matrix::rows).sum();
    let cols = parts.iter().map(Matrix::cols).sum();
    let mut out = Matrix::zeros(rows, cols);
    let (mut r, mut c) = (0, 0);
    for m in parts {
        out.put(r, c, m);
        r += m.rows();
        c += m.cols();
    }
    out
}

fn check_same(m: &Representation, n: &Representation) -> Result<()> {
    if m.algebra != n.algebra || m.field_char != n.field_char {
        return Err(Error::SizeMismatch { left: m.algebra.vertices(), right: n.algebra.vertices() });
    }
    Ok(())
}

/// Flattens a list of matrix blocks into one coordinate vector and back.
struct Layout {
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    total: usize,
}

impl Layout {
    fn new(shapes: Vec<(usize, usize)>) -> Self {
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut total = 0;
        for &(r, c) in &shapes {
            offsets.push(total);
            total += r * c;
        }
        Layout { shapes, offsets, total }
    }

    fn unflatten(&self, v: &[u64]) -> Vec<Matrix> {
        self.shapes
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &o)| {
                let mut m = Matrix::zeros(r, c);
                for i in 0..r {
                    for j in 0..c {
                        m.set(i, j, v[o + i * c + j]);
                    }
                }
                m
            })
            .collect()
    }

    fn flatten(&self, blocks: &[Matrix]) -> Vec<u64> {
        let mut v = vec![0; self.total];
        for (m, &o) in blocks.iter().zip(&self.offsets) {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    v[o + i * m.cols() + j] = m.get(i, j);
                }
            }
        }
        v
    }
}

/// Matrix of a linear map between flattened block spaces.
fn linear_map(
    dom: &Layout,
    cod: &Layout,
    apply: impl Fn(&[Matrix]) -> Vec<Matrix>,
) -> Matrix {
    let mut out = Matrix::zeros(cod.total, dom.total);
    let mut unit = vec![0; dom.total];
    for j in 0..dom.total {
        unit[j] = 1;
        let image = cod.flatten(&apply(&dom.unflatten(&unit)));
        for (i, x) in image.into_iter().enumerate() {
            out.set(i, j, x);
        }
        unit[j] = 0;
    }
    out
}

/// The spaces and differentials computing Hom and Ext¹ from `m` to `n`.
struct Complex {
    c0: Layout,
    c1: Layout,
    d0: Matrix,
    d1: Matrix,
}

fn complex(m: &Representation, n: &Representation) -> Complex {
    let f = m.field();
    let alg = m.algebra;
    let arrows = alg.arrows();
    let relations = alg.relations();
    let c0 = Layout::new((0..=alg.vertices()).map(|v| (n.dims[v], m.dims[v])).collect());
    let c1 = Layout::new(arrows.iter().map(|a| (n.dims[a.target], m.dims[a.source])).collect());
    let ends: Vec<(usize, usize)> = relations
        .iter()
        .map(|r| (arrows[r[0].1[0]].source, arrows[*r[0].1.last().expect("path")].target))
        .collect();
    let c2 = Layout::new(ends.iter().map(|&(s, t)| (n.dims[t], m.dims[s])).collect());

    let d0 = linear_map(&c0, &c1, |phi| {
        arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let left = f.matmul(&n.maps[k], &phi[a.source]);
                let right = f.matmul(&phi[a.target], &m.maps[k]);
                f.matsub(&left, &right)
            })
            .collect()
    });
    let d1 = linear_map(&c1, &c2, |psi| {
        relations
            .iter()
            .zip(&ends)
            .map(|(rel, &(s, t))| {
                let mut acc = Matrix::zeros(n.dims[t], m.dims[s]);
                for (c, path) in rel {
                    for j in 0..path.len() {
                        // n-maps after step j, psi at step j, m-maps before it.
                        let mut x = Matrix::identity(m.dims[s]);
                        for &a in &path[..j] {
                            x = f.matmul(&m.maps[a], &x);
                        }
                        x = f.matmul(&psi[path[j]], &x);
                        for &a in &path[j + 1..] {
                            x = f.matmul(&n.maps[a], &x);
                        }
                        acc = f.matadd(&acc, &f.scale(f.reduce(*c), &x));
                    }
                }
                acc
            })
            .collect()
    });
    Complex { c0, c1, d0, d1 }
}

/// Basis of `Hom(m, n)`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    check_same(m, n)?;
    let cx = complex(m, n);
    let f = m.field();
    Ok(f.nullspace(&cx.d0).iter().map(|v| cx.c0.unflatten(v)).collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// A cocycle representing a class in `Ext¹(M, N)`: one matrix per arrow from
/// the source space in `M` to the target space in `N`.
pub type ExtCocycle = Vec<Matrix>;

/// Dimension of `Ext¹(m, n)` and cocycles spanning it modulo coboundaries.
pub fn ext_space(m: &Representation, n: &Representation) -> Result<(usize, Vec<ExtCocycle>)> {
    check_same(m, n)?;
    let cx = complex(m, n);
    let f = m.field();
    let mut span = cx.d0.clone();
    let mut rank = f.rank(&span);
    let mut basis = Vec::new();
    for z in f.nullspace(&cx.d1) {
        let candidate = Matrix::hstack(&[span.clone(), Matrix::from_column(&z)]);
        let r = f.rank(&candidate);
        if r > rank {
            rank = r;
            span = candidate;
            basis.push(cx.c1.unflatten(&z));
        }
    }
    Ok((basis.len(), basis))
}

pub fn ext_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(ext_space(m, n)?.0)
}

/// The extension `sub ↪ E ↠ quot` given by a cocycle in `Ext¹(quot, sub)`.
pub fn extension_from_cocycle(
    c: &ExtCocycle,
    quot: &Representation,
    sub: &Representation,
) -> Result<Representation> {
    check_same(quot, sub)?;
    extension_from_cocycles(core::slice::from_ref(c), quot, sub, false)
}

/// `sub^k ↪ E ↠ quot` (or `sub ↪ E ↠ quot^k` when `stack_quot`) built from
/// `k` cocycles placed side by side.
fn extension_from_cocycles(
    cs: &[ExtCocycle],
    quot: &Representation,
    sub: &Representation,
    stack_quot: bool,
) -> Result<Representation> {
    let k = cs.len().max(1);
    let arrows = quot.algebra.arrows();
    let (sub_k, quot_k) = if stack_quot { (1, k) } else { (k, 1) };
    let dims: Vec<usize> = (0..quot.dims.len())
        .map(|v| sub.dims[v] * sub_k + quot.dims[v] * quot_k)
        .collect();
    let maps = arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let top_left = block_diag(&vec![sub.maps[a].clone(); sub_k]);
            let bottom_right = block_diag(&vec![quot.maps[a].clone(); quot_k]);
            let corner = if cs.is_empty() {
                Matrix::zeros(top_left.rows(), bottom_right.cols())
            } else if stack_quot {
                Matrix::hstack(&cs.iter().map(|c| c[a].clone()).collect::<Vec<_>>())
            } else {
                Matrix::vstack(&cs.iter().map(|c| c[a].clone()).collect::<Vec<_>>())
            };
            let mut e = Matrix::zeros(dims[arr.target], dims[arr.source]);
            e.put(0, 0, &top_left);
            e.put(0, top_left.cols(), &corner);
            e.put(top_left.rows(), top_left.cols(), &bottom_right);
            e
        })
        .collect();
    Representation::new(quot.algebra, quot.field(), dims, maps)
}

/// `s^e ↪ E ↠ t` with `e = dim Ext¹(t, s)`.
pub fn universal_extension(t: &Representation, s: &Representation) -> Result<Representation> {
    check_stone(s)?;
    let (e, cs) = ext_space(t, s)?;
    if e == 0 {
        return Ok(t.clone());
    }
    extension_from_cocycles(&cs, t, s, false)
}

/// `t ↪ E ↠ s^e` with `e = dim Ext¹(s, t)`.
pub fn universal_coextension(t: &Representation, s: &Representation) -> Result<Representation> {
    check_stone(s)?;
    let (e, cs) = ext_space(s, t)?;
    if e == 0 {
        return Ok(t.clone());
    }
    extension_from_cocycles(&cs, s, t, true)
}

fn check_stone(s: &Representation) -> Result<()> {
    if hom_dim(s, s)? != 1 || ext_dim(s, s)? != 0 {
        return Err(Error::NotABrick("universal extension needs a rigid brick".into()));
    }
    Ok(())
}

/// Vertex-wise kernel, image and cokernel of a morphism.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub kernel: Representation,
    pub image: Representation,
    pub cokernel: Representation,
}

/// Column space basis of `a` as a matrix with independent columns.
fn column_basis(f: &Field, a: &Matrix) -> Matrix {
    let (r, pivots) = f.rref(&a.transpose());
    let rows: Vec<Vec<u64>> = (0..pivots.len()).map(|i| r.to_rows()[i].clone()).collect();
    Matrix::from_columns(a.rows(), &rows)
}

fn left_inverse(f: &Field, a: &Matrix) -> Matrix {
    f.right_inverse(&a.transpose()).expect("independent columns").transpose()
}

pub fn hom_image_factorization(
    phi: &Morphism,
    m: &Representation,
    n: &Representation,
) -> Result<Factorization> {
    check_same(m, n)?;
    let f = m.field();
    let alg = m.algebra;
    let arrows = alg.arrows();
    let verts = alg.vertices();
    // Inclusions of the kernel and image, projections onto the cokernel.
    let mut ker = vec![Matrix::zeros(0, 0)];
    let mut img = vec![Matrix::zeros(0, 0)];
    let mut coker = vec![Matrix::zeros(0, 0)];
    if phi.len() != verts + 1 {
        return Err(Error::InvalidRepresentation("morphism has the wrong number of vertices".into()));
    }
    for (v, p) in phi.iter().enumerate().skip(1) {
        if p.rows() != n.dims[v] || p.cols() != m.dims[v] {
            return Err(Error::InvalidRepresentation(format!("morphism has wrong shape at {v}")));
        }
        ker.push(Matrix::from_columns(m.dims[v], &f.nullspace(p)));
        img.push(column_basis(&f, p));
        coker.push(Matrix::from_row_vectors(n.dims[v], &f.left_nullspace(p)));
    }
    for (k, a) in arrows.iter().enumerate() {
        let lhs = f.matmul(&n.maps[k], &phi[a.source]);
        let rhs = f.matmul(&phi[a.target], &m.maps[k]);
        if lhs != rhs {
            return Err(Error::InvalidRepresentation("not a morphism".into()));
        }
    }
    let dims_of = |bs: &[Matrix], cols: bool| -> Vec<usize> {
        let mut d = vec![0];
        d.extend(bs[1..].iter().map(|b| if cols { b.cols() } else { b.rows() }));
        d
    };
    let sub_maps = |inc: &[Matrix], x: &Representation| -> Vec<Matrix> {
        arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let moved = f.matmul(&x.maps[k], &inc[a.source]);
                f.matmul(&left_inverse(&f, &inc[a.target]), &moved)
            })
            .collect()
    };
    let kernel = Representation::new(alg, f, dims_of(&ker, true), sub_maps(&ker, m))?;
    let image = Representation::new(alg, f, dims_of(&img, true), sub_maps(&img, n))?;
    let quot_maps = arrows
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let q_t = &coker[a.target];
            let lift = f.right_inverse(&coker[a.source]).expect("independent rows");
            f.matmul(&f.matmul(q_t, &n.maps[k]), &lift)
        })
        .collect();
    let cokernel = Representation::new(alg, f, dims_of(&coker, false), quot_maps)?;
    Ok(Factorization { kernel, image, cokernel })
}

/// Rank of a morphism at every vertex (entry 0 unused).
pub fn ranks(phi: &Morphism, field: &Field) -> Vec<usize> {
    phi.iter().map(|p| field.rank(p)).collect()
}

/// Classification of a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Zero,
    Mono,
    Epi,
    /// Both mono and epi.
    Iso,
    Neither,
}

pub fn classify(phi: &Morphism, m: &Representation, n: &Representation) -> MapKind {
    let f = m.field();
    let r = ranks(phi, &f);
    let mono = (1..r.len()).all(|v| r[v] == m.dims[v]);
    let epi = (1..r.len()).all(|v| r[v] == n.dims[v]);
    match (mono, epi) {
        _ if r.iter().all(|&x| x == 0) && !(mono && epi) => MapKind::Zero,
        (true, true) => MapKind::Iso,
        (true, false) => MapKind::Mono,
        (false, true) => MapKind::Epi,
        (false, false) => MapKind::Neither,
    }
}

/// `t -> s^d` assembled from a basis of `Hom(t, s)`.
pub fn stacked_to(t: &Representation, s: &Representation) -> Result<(usize, Morphism)> {
    let basis = hom_space(t, s)?;
    let d = basis.len();
    let phi = (0..=t.algebra.vertices())
        .map(|v| {
            if d == 0 {
                Matrix::zeros(0, t.dims[v])
            } else {
                Matrix::vstack(&basis.iter().map(|b| b[v].clone()).collect::<Vec<_>>())
            }
        })
        .collect();
    Ok((d, phi))
}

/// `s^d -> t` assembled from a basis of `Hom(s, t)`.
pub fn stacked_from(s: &Representation, t: &Representation) -> Result<(usize, Morphism)> {
    let basis = hom_space(s, t)?;
    let d = basis.len();
    let phi = (0..=s.algebra.vertices())
        .map(|v| {
            if d == 0 {
                Matrix::zeros(t.dims[v], 0)
            } else {
                Matrix::hstack(&basis.iter().map(|b| b[v].clone()).collect::<Vec<_>>())
            }
        })
        .collect();
    Ok((d, phi))
}

pub fn is_brick(m: &Representation) -> Result<bool> {
    Ok(!m.is_zero() && hom_dim(m, m)? == 1)
}

/// Whether `m` and `n` are isomorphic. Searches the Hom space exhaustively
/// when it has at most 20000 elements and samples it otherwise.
pub fn is_iso(m: &Representation, n: &Representation) -> Result<bool> {
    check_same(m, n)?;
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    let f = m.field();
    let p = f.characteristic();
    let k = basis.len() as u32;
    let invertible = |coeffs: &[u64]| {
        (1..m.dims.len()).all(|v| {
            let mut acc = Matrix::zeros(n.dims[v], m.dims[v]);
            for (c, b) in coeffs.iter().zip(&basis) {
                acc = f.matadd(&acc, &f.scale(*c, &b[v]));
            }
            f.rank(&acc) == m.dims[v]
        })
    };
    if p.checked_pow(k).is_some_and(|total| total <= 20_000) {
        let total = p.pow(k);
        let mut coeffs = vec![0; basis.len()];
        for mut idx in 0..total {
            for c in coeffs.iter_mut() {
                *c = idx % p;
                idx /= p;
            }
            if invertible(&coeffs) {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..256 {
        let coeffs: Vec<u64> = basis.iter().map(|_| rng.next_u64() % p).collect();
        if invertible(&coeffs) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Dimension vectors of the radical layers `rad^k M / rad^{k+1} M`.
pub fn radical_layers(m: &Representation) -> Vec<Vec<usize>> {
    let f = m.field();
    let arrows = m.algebra.arrows();
    let verts = m.algebra.vertices();
    // Current power of the radical at each vertex, as column bases.
    let mut cur: Vec<Matrix> = (0..=verts).map(|v| Matrix::identity(m.dims[v])).collect();
    let mut layers = Vec::new();
    loop {
        let mut next: Vec<Matrix> = (0..=verts).map(|v| Matrix::zeros(m.dims[v], 0)).collect();
        for (k, a) in arrows.iter().enumerate() {
            let moved = f.matmul(&m.maps[k], &cur[a.source]);
            next[a.target] = Matrix::hstack(&[next[a.target].clone(), moved]);
        }
        let next: Vec<Matrix> = next.iter().map(|x| column_basis(&f, x)).collect();
        let layer: Vec<usize> = (0..=verts).map(|v| cur[v].cols() - next[v].cols()).collect();
        if layer.iter().all(|&x| x == 0) {
            break;
        }
        layers.push(layer);
        cur = next;
    }
    layers
}

/// The string module of an `RA_n` brick: `K` on the support, identity on
/// acting arrows.
pub fn rep_of_string(b: &StringBrick, field: Field) -> Representation {
    let alg = Algebra::RA(b.n());
    let dims: Vec<usize> = b.dims();
    let (p, _) = b.support();
    let mut maps: Vec<Matrix> = alg
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    for (k, act) in b.actions().iter().enumerate() {
        let edge = p + k;
        let idx = 2 * (edge - 1) + usize::from(*act == Action::Up);
        maps[idx] = Matrix::identity(1);
    }
    Representation::new(alg, field, dims, maps).expect("string modules satisfy the relations")
}

/// Recognizes the string module of a brick, up to rescaling the arrows.
pub fn string_of_rep(m: &Representation) -> Option<StringBrick> {
    let Algebra::RA(n) = m.algebra else { return None };
    let support: Vec<usize> = (1..=n).filter(|&v| m.dims[v] > 0).collect();
    let (&p, &q) = (support.first()?, support.last()?);
    if support.len() != q - p + 1 || support.iter().any(|&v| m.dims[v] != 1) {
        return None;
    }
    let mut actions = Vec::new();
    for edge in p..q {
        let down = !m.maps[2 * (edge - 1)].is_zero();
        let up = !m.maps[2 * (edge - 1) + 1].is_zero();
        match (down, up) {
            (true, false) => actions.push(Action::Down),
            (false, true) => actions.push(Action::Up),
            _ => return None,
        }
    }
    StringBrick::new(n, (p, q), actions).ok()
}

/// The modules appearing in the D4 counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D4Module {
    /// `1/3`.
    M,
    /// `1/2`.
    N,
    /// `2/1/4`.
    NPrime,
    /// `1/23/1/4`, the middle term of `N' ↪ E ↠ M`.
    E,
    /// `1/23`.
    TopOneSocleTwoThree,
}

impl D4Module {
    pub const ALL: [D4Module; 5] =
        [D4Module::M, D4Module::N, D4Module::NPrime, D4Module::E, D4Module::TopOneSocleTwoThree];

    pub fn name(self) -> &'static str {
        match self {
            D4Module::M => "M",
            D4Module::N => "N",
            D4Module::NPrime => "N'",
            D4Module::E => "E",
            D4Module::TopOneSocleTwoThree => "1/23",
        }
    }

    pub fn build(self, field: Field) -> Representation {
        let alg = Algebra::PiD4;
        let a = |i: usize| alg.arrow_index(&format!("a{i}")).expect("arrow");
        let g = |i: usize| alg.arrow_index(&format!("a{i}*")).expect("arrow");
        let (dims, entries): (Vec<usize>, Vec<ArrowBlock>) = match self {
            D4Module::M => (vec![0, 1, 0, 1, 0], vec![(g(3), vec![vec![1]])]),
            D4Module::N => (vec![0, 1, 1, 0, 0], vec![(g(2), vec![vec![1]])]),
            D4Module::NPrime => {
                (vec![0, 1, 1, 0, 1], vec![(a(2), vec![vec![1]]), (g(4), vec![vec![1]])])
            }
            D4Module::TopOneSocleTwoThree => {
                (vec![0, 1, 1, 1, 0], vec![(g(2), vec![vec![1]]), (g(3), vec![vec![1]])])
            }
            // Basis (u, v) at the center: u is the top, v the second copy of 1.
            D4Module::E => (
                vec![0, 2, 1, 1, 1],
                vec![
                    (g(2), vec![vec![1, 0]]),
                    (g(3), vec![vec![1, 0]]),
                    (g(4), vec![vec![0, 1]]),
                    (a(2), vec![vec![0], vec![1]]),
                    (a(3), vec![vec![0], vec![-1]]),
                ],
            ),
        };
        let mut maps: Vec<Matrix> = alg
            .arrows()
            .iter()
            .map(|x| Matrix::zeros(dims[x.target], dims[x.source]))
            .collect();
        for (idx, rows) in entries {
            let reduced: Vec<Vec<u64>> =
                rows.iter().map(|r| r.iter().map(|&x| field.reduce(x)).collect()).collect();
            maps[idx] = Matrix::from_rows(reduced.len(), reduced[0].len(), &reduced).expect("shape");
        }
        Representation::new(alg, field, dims, maps).expect("named D4 module satisfies relations")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brick::enumerate_bricks;

    fn f() -> Field {
        Field::default()
    }

    fn walk(n: usize, s: &str) -> Representation {
        rep_of_string(&StringBrick::parse_walk(n, s).unwrap(), f())
    }

    #[test]
    fn string_reps() {
        let s = walk(3, "1");
        assert_eq!(s.dims(), &[0, 1, 0, 0]);
        assert!(s.maps().iter().all(Matrix::is_zero));
        let d = walk(2, "1>2");
        assert_eq!(d.map(0), &Matrix::identity(1));
        let x = walk(4, "1<2>3");
        assert_eq!(x.dims(), &[0, 1, 1, 1, 0]);
        assert!(!x.map(1).is_zero() && !x.map(2).is_zero());
        assert!(x.map(0).is_zero() && x.map(3).is_zero());
        assert_eq!(string_of_rep(&x).unwrap().walk(), "1<2>3");
    }

    #[test]
    fn relations_are_checked() {
        let alg = Algebra::RA(2);
        let one = Matrix::identity(1);
        let r = Representation::new(alg, f(), vec![0, 1, 1], vec![one.clone(), one]);
        assert!(r.is_err());
    }

    #[test]
    fn bricks_are_rigid() {
        for b in enumerate_bricks(3) {
            let m = rep_of_string(&b, f());
            assert_eq!(hom_dim(&m, &m).unwrap(), 1, "{b}");
            assert_eq!(ext_dim(&m, &m).unwrap(), 0, "{b}");
            assert!(is_brick(&m).unwrap());
        }
        let s = walk(2, "1");
        assert!(!is_brick(&s.direct_sum(&s)).unwrap());
    }

    #[test]
    fn simple_extension_in_ra3() {
        let s1 = walk(3, "1");
        let s2 = walk(3, "2");
        let e = universal_extension(&s2, &s1).unwrap();
        // s1 ↪ E ↠ s2 with E = 2 over 1.
        assert_eq!(string_of_rep(&e).unwrap().walk(), "1<2");
        assert_eq!(ext_dim(&e, &s1).unwrap(), 0);
        assert_eq!(universal_extension(&s1, &walk(3, "3")).unwrap(), s1);
    }

    #[test]
    fn split_extension() {
        let s1 = walk(3, "1");
        let s2 = walk(3, "2");
        let zero: ExtCocycle = Algebra::RA(3)
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(s1.dim(a.target), s2.dim(a.source)))
            .collect();
        let e = extension_from_cocycle(&zero, &s2, &s1).unwrap();
        assert!(is_iso(&e, &s1.direct_sum(&s2)).unwrap());
    }

    #[test]
    fn factorizations() {
        let m = walk(4, "1>2>3<4");
        let n = walk(4, "1>2<3");
        let basis = hom_space(&m, &n).unwrap();
        assert_eq!(basis.len(), 1);
        let fac = hom_image_factorization(&basis[0], &m, &n).unwrap();
        assert_eq!(string_of_rep(&fac.image).unwrap().walk(), "1>2");
        assert_eq!(classify(&basis[0], &m, &n), MapKind::Neither);

        let id = hom_space(&m, &m).unwrap().remove(0);
        let fac = hom_image_factorization(&id, &m, &m).unwrap();
        assert!(fac.kernel.is_zero() && fac.cokernel.is_zero());
        assert!(is_iso(&fac.image, &m).unwrap());

        let zero: Morphism = (0..=4).map(|v| Matrix::zeros(n.dim(v), m.dim(v))).collect();
        let fac = hom_image_factorization(&zero, &m, &n).unwrap();
        assert!(is_iso(&fac.kernel, &m).unwrap());
        assert!(fac.image.is_zero());
        assert!(is_iso(&fac.cokernel, &n).unwrap());
    }

    #[test]
    fn two_sided_extension() {
        let s = walk(4, "2>3<4");
        let t = walk(4, "1<2>3");
        let (e, cs) = ext_space(&s, &t).unwrap();
        assert!(e >= 1);
        let mid = extension_from_cocycle(&cs[0], &s, &t).unwrap();
        let expected = walk(4, "2>3").direct_sum(&walk(4, "1<2>3<4"));
        assert!(is_iso(&mid, &expected).unwrap());
    }

    #[test]
    fn d4_modules() {
        use D4Module::*;
        let [m, n, np, e, x] = D4Module::ALL.map(|d| d.build(f()));
        for r in [&m, &n, &np, &e, &x] {
            assert_eq!(hom_dim(r, r).unwrap(), 1);
            assert_eq!(ext_dim(r, r).unwrap(), 0);
        }
        assert_eq!(hom_dim(&n, &np).unwrap(), 0);
        assert_eq!(hom_dim(&n, &m).unwrap(), 0);
        assert_eq!(hom_dim(&np, &m).unwrap(), 0);
        assert_eq!(hom_dim(&m, &np).unwrap(), 0);
        assert_eq!(ext_dim(&n, &m).unwrap(), 0);
        assert_eq!(ext_dim(&n, &np).unwrap(), 0);
        // The nonsplit direction is N' ↪ E ↠ M.
        assert_eq!(ext_dim(&m, &np).unwrap(), 1);
        let built = universal_coextension(&np, &m).unwrap();
        assert!(is_iso(&built, &e).unwrap());
        assert_eq!(built.dims(), &[0, 2, 1, 1, 1]);
        assert_eq!(radical_layers(&e).len(), 4);
        let _ = (M, N, NPrime, E, TopOneSocleTwoThree);
    }

    #[test]
    fn field_change() {
        let m = D4Module::E.build(f());
        let m3 = m.with_field(Field::new(3).unwrap()).unwrap();
        assert_eq!(hom_dim(&m3, &m3).unwrap(), 1);
    }
}
