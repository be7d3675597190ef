//! Exact integer and rational linear algebra: Hermite normal forms,
//! integer kernels, primitive ray generators, functional restriction.
//!
//! Everything here is exact; there is no floating-point code anywhere in
//! this crate. Sublattices are kept saturated and in row Hermite normal
//! form so that equality of lattices is plain structural equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn neg_vec(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

/// gcd of all entries, nonnegative; zero for the zero vector.
pub fn vec_gcd(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divide an integer vector by the gcd of its entries, keeping direction.
/// Returns `None` for the zero vector.
pub fn primitive_int(v: &[Int]) -> Option<Vec<Int>> {
    let g = vec_gcd(v);
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

/// Scale a rational vector by a positive rational so it becomes a
/// primitive integer vector. Returns `None` for the zero vector.
pub fn primitive_from_rat(v: &[Rat]) -> Option<Vec<Int>> {
    let lcm = v
        .iter()
        .fold(Int::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive_int(&ints)
}

/// Rank of a rational matrix, by Gaussian elimination.
pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for j in c..cols {
                    let s = &m[rank][j] * &factor;
                    m[r][j] = &m[r][j] - s;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square rational matrix, by fraction-free-ish Gauss.
pub fn det_rat(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for j in c..n {
                    let s = &m[c][j] * &factor;
                    m[r][j] = &m[r][j] - s;
                }
            }
        }
    }
    det
}

/// Solve `A x = b` over the rationals. `a` holds the rows of A.
/// Returns `None` when the system is inconsistent; when the solution
/// space is positive-dimensional an arbitrary solution is returned.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for j in c..=cols {
            m[rank][j] = &m[rank][j] / &pivot;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                for j in c..=cols {
                    let s = &m[rank][j] * &factor;
                    m[r][j] = &m[r][j] - s;
                }
            }
        }
        pivots.push((rank, c));
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // inconsistent iff a zero row has nonzero rhs
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Row Hermite normal form with transformation matrix.
///
/// Returns `(H, U)` with `U` unimodular, `U * A = H`, `H` in row HNF
/// (positive pivots in strictly increasing columns, entries above a pivot
/// reduced into `[0, pivot)`), and zero rows trailing.
pub fn hnf(a: &[Vec<Int>], cols: usize) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let m = a.len();
    for row in a {
        assert_eq!(row.len(), cols, "hnf: ragged input");
    }
    let mut h: Vec<Vec<Int>> = a.to_vec();
    let mut u: Vec<Vec<Int>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut pr = 0;
    for pc in 0..cols {
        if pr == m {
            break;
        }
        let Some(first) = (pr..m).find(|&r| !h[r][pc].is_zero()) else {
            continue;
        };
        h.swap(pr, first);
        u.swap(pr, first);
        for r in pr + 1..m {
            if h[r][pc].is_zero() {
                continue;
            }
            let x = h[pr][pc].clone();
            let y = h[r][pc].clone();
            let egcd = x.extended_gcd(&y);
            let (g, s, t) = (egcd.gcd, egcd.x, egcd.y);
            let xg = &x / &g;
            let yg = &y / &g;
            // rows (pr, r) <- (s*pr + t*r, -yg*pr + xg*r), determinant 1
            for mat in [&mut h, &mut u] {
                let len = mat[pr].len();
                for j in 0..len {
                    let a0 = mat[pr][j].clone();
                    let b0 = mat[r][j].clone();
                    mat[pr][j] = &s * &a0 + &t * &b0;
                    mat[r][j] = -&yg * &a0 + &xg * &b0;
                }
            }
        }
        if h[pr][pc].is_negative() {
            for x in h[pr].iter_mut() {
                *x = -x.clone();
            }
            for x in u[pr].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot = h[pr][pc].clone();
        for r in 0..pr {
            let q = h[r][pc].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let s = &q * &h[pr][j];
                h[r][j] = &h[r][j] - s;
            }
            for j in 0..m {
                let s = &q * &u[pr][j];
                u[r][j] = &u[r][j] - s;
            }
        }
        pr += 1;
    }
    (h, u)
}

/// A sublattice of some ambient `Z^n`, stored as its row-HNF basis.
/// Two values describing the same sublattice compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntLatticeBasis {
    ambient: usize,
    rows: Vec<Vec<Int>>,
}

impl IntLatticeBasis {
    /// Canonical basis of the lattice generated by `rows` (over Z).
    pub fn from_rows(rows: &[Vec<Int>], ambient: usize) -> Self {
        let (h, _) = hnf(rows, ambient);
        let rows = h.into_iter().filter(|r| !is_zero_vec(r)).collect();
        Self { ambient, rows }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { Int::one() } else { Int::zero() })
                    .collect()
            })
            .collect();
        Self { ambient, rows }
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// Coordinates of `v` with respect to the basis rows, if `v` lies in
    /// the rational span.
    pub fn span_coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient, "span_coords: wrong length");
        if self.rows.is_empty() {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        // solve y * rows = v, i.e. rows^T y = v
        let at: Vec<Vec<Rat>> = (0..self.ambient)
            .map(|j| {
                self.rows
                    .iter()
                    .map(|r| Rat::from_integer(r[j].clone()))
                    .collect()
            })
            .collect();
        let y = solve_rat(&at, v)?;
        // solve_rat only guarantees A y = v on the row-reduced system;
        // verify the full system exactly.
        for j in 0..self.ambient {
            let mut s = Rat::zero();
            for (i, row) in self.rows.iter().enumerate() {
                s += Rat::from_integer(row[j].clone()) * &y[i];
            }
            if s != v[j] {
                return None;
            }
        }
        Some(y)
    }

    /// Whether an integer vector lies in the lattice (not just the span).
    pub fn contains_int(&self, v: &[Int]) -> bool {
        match self.span_coords(&rat_vec(v)) {
            Some(coords) => coords.iter().all(|c| c.is_integer()),
            None => false,
        }
    }
}

/// Canonical saturated basis of `{x in Z^n : A x = 0}`.
///
/// The result is a kernel lattice (saturated), never a finite-index
/// sublattice, and is HNF-canonical.
pub fn integer_kernel(a: &[Vec<Int>], n_cols: usize) -> IntLatticeBasis {
    for row in a {
        assert_eq!(row.len(), n_cols, "integer_kernel: ragged input");
    }
    // Row-HNF the transpose; rows of U matching zero rows of H span the
    // kernel, and that span is automatically saturated since U is
    // unimodular.
    let t: Vec<Vec<Int>> = (0..n_cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect();
    let (h, u) = hnf(&t, a.len());
    let kernel_rows: Vec<Vec<Int>> = h
        .iter()
        .zip(u)
        .filter(|(hr, _)| is_zero_vec(hr))
        .map(|(_, ur)| ur)
        .collect();
    IntLatticeBasis::from_rows(&kernel_rows, n_cols)
}

/// The unique primitive point of `l` on the ray through `v`, in
/// coordinates with respect to `l`'s basis rows.
pub fn primitive_generator(v: &[Rat], l: &IntLatticeBasis) -> Result<Vec<Int>> {
    if v.len() != l.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs ambient {}",
            v.len(),
            l.ambient()
        )));
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let coords = l.span_coords(v).ok_or(Error::NotInLattice)?;
    primitive_from_rat(&coords).ok_or(Error::ZeroVector)
}

/// Restrict a functional on `M` (given in the dual basis of `M`) to the
/// sublattice `m0`; component `i` of the result pairs `v` with row `i`.
pub fn restrict_functional(v: &[Int], m0: &IntLatticeBasis) -> Vec<Int> {
    assert_eq!(v.len(), m0.ambient(), "restrict_functional: wrong length");
    m0.rows().iter().map(|row| dot_int(v, row)).collect()
}
