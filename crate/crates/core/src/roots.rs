//! Root-system metadata: simple roots, Cartan pairings, orthogonality.
//!
//! Cartan blocks follow the Bourbaki numbering for every type. Entry
//! `cartan[i][j]` is the pairing of the i-th simple coroot with the j-th
//! simple root. A root system may carry extra central torus characters;
//! those coordinates pair to zero with every coroot.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Int, Rat};

const FACTOR_LETTERS: [&str; 10] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }
}

/// A character of the Borel subgroup, written over the simple roots
/// followed by the central torus coordinates. Rational coefficients are
/// allowed; integrality is only demanded where a coroot restriction must
/// land in the dual lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    pub coords: Vec<Rat>,
}

impl Character {
    pub fn zero(len: usize) -> Self {
        Self { coords: vec![Rat::zero(); len] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Character) -> Character {
        Character {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, s: &Rat) -> Character {
        Character { coords: self.coords.iter().map(|c| c * s).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    factors: Vec<(TypeLetter, usize)>,
    central_rank: usize,
    labels: Vec<String>,
    cartan: Vec<Vec<Int>>,
}

/// Bourbaki Cartan block for one simple factor; entry (i, j) is
/// `<alpha_i^vee, alpha_j>`, 0-indexed.
fn cartan_block(letter: TypeLetter, rank: usize) -> Result<Vec<Vec<Int>>> {
    let bad = |msg: &str| {
        Err(Error::UnsupportedType(format!(
            "{}{rank}: {msg}",
            letter.as_char()
        )))
    };
    match (letter, rank) {
        (TypeLetter::A, n) if n < 1 => return bad("rank must be at least 1"),
        (TypeLetter::B, n) if n < 2 => return bad("rank must be at least 2"),
        (TypeLetter::C, n) if n < 2 => return bad("rank must be at least 2"),
        (TypeLetter::D, n) if n < 3 => return bad("rank must be at least 3"),
        (TypeLetter::E, n) if !(6..=8).contains(&n) => return bad("rank must be 6, 7 or 8"),
        (TypeLetter::F, n) if n != 4 => return bad("rank must be 4"),
        (TypeLetter::G, n) if n != 2 => return bad("rank must be 2"),
        _ => {}
    }
    let mut m = vec![vec![Int::zero(); rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Int::from(2);
    }
    let set = |m: &mut Vec<Vec<Int>>, i: usize, j: usize, v: i64| {
        m[i][j] = Int::from(v);
    };
    match letter {
        TypeLetter::A => {
            for i in 0..rank.saturating_sub(1) {
                set(&mut m, i, i + 1, -1);
                set(&mut m, i + 1, i, -1);
            }
        }
        TypeLetter::B => {
            for i in 0..rank - 1 {
                set(&mut m, i, i + 1, -1);
                set(&mut m, i + 1, i, -1);
            }
            set(&mut m, rank - 1, rank - 2, -2);
        }
        TypeLetter::C => {
            for i in 0..rank - 1 {
                set(&mut m, i, i + 1, -1);
                set(&mut m, i + 1, i, -1);
            }
            set(&mut m, rank - 2, rank - 1, -2);
        }
        TypeLetter::D => {
            // chain on nodes 1..n-1, with node n attached to node n-2
            for i in 0..rank - 2 {
                set(&mut m, i, i + 1, -1);
                set(&mut m, i + 1, i, -1);
            }
            set(&mut m, rank - 3, rank - 1, -1);
            set(&mut m, rank - 1, rank - 3, -1);
        }
        TypeLetter::E => {
            // Bourbaki: chain 1-3-4-5-...-n with node 2 attached to node 4
            let edges: &[(usize, usize)] = match rank {
                6 => &[(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)],
                7 => &[(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7)],
                _ => &[(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)],
            };
            for &(a, b) in edges {
                set(&mut m, a - 1, b - 1, -1);
                set(&mut m, b - 1, a - 1, -1);
            }
        }
        TypeLetter::F => {
            set(&mut m, 0, 1, -1);
            set(&mut m, 1, 0, -1);
            set(&mut m, 1, 2, -1);
            set(&mut m, 2, 1, -2);
            set(&mut m, 2, 3, -1);
            set(&mut m, 3, 2, -1);
        }
        TypeLetter::G => {
            set(&mut m, 0, 1, -3);
            set(&mut m, 1, 0, -1);
        }
    }
    Ok(m)
}

/// Parse a root-system spec `FACTOR ("x" FACTOR)* ("+C" INT)?` with
/// FACTOR in `{A..G}{rank}`, e.g. `"A1xF4"` or `"A1+C2"`.
pub fn parse_root_system(spec: &str) -> Result<RootSystem> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty root system spec".into()));
    }
    let (factor_part, central_rank) = match spec.split_once("+C") {
        Some((f, c)) => {
            let rank: usize = c
                .parse()
                .map_err(|_| Error::Parse(format!("bad central rank '{c}'")))?;
            (f, rank)
        }
        None => (spec, 0),
    };
    if factor_part.is_empty() {
        return Err(Error::Parse("missing simple factors".into()));
    }
    let mut factors = Vec::new();
    for tok in factor_part.split('x') {
        let tok = tok.trim();
        let mut chars = tok.chars();
        let letter = match chars.next() {
            Some('A') => TypeLetter::A,
            Some('B') => TypeLetter::B,
            Some('C') => TypeLetter::C,
            Some('D') => TypeLetter::D,
            Some('E') => TypeLetter::E,
            Some('F') => TypeLetter::F,
            Some('G') => TypeLetter::G,
            _ => return Err(Error::Parse(format!("bad factor '{tok}'"))),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad factor rank in '{tok}'")))?;
        factors.push((letter, rank));
    }
    if factors.len() > FACTOR_LETTERS.len() {
        return Err(Error::UnsupportedType(format!(
            "at most {} simple factors are supported",
            FACTOR_LETTERS.len()
        )));
    }

    let mut labels = Vec::new();
    let mut cartan: Vec<Vec<Int>> = Vec::new();
    let total: usize = factors.iter().map(|&(_, r)| r).sum();
    let mut offset = 0;
    for (fi, &(letter, rank)) in factors.iter().enumerate() {
        let base = FACTOR_LETTERS[fi];
        if rank == 1 {
            labels.push(base.to_string());
        } else {
            for i in 1..=rank {
                labels.push(format!("{base}_{i}"));
            }
        }
        let block = cartan_block(letter, rank)?;
        for row in block {
            let mut full = vec![Int::zero(); total];
            full[offset..offset + rank].clone_from_slice(&row);
            cartan.push(full);
        }
        offset += rank;
    }

    Ok(RootSystem { factors, central_rank, labels, cartan })
}

impl RootSystem {
    pub fn num_simple_roots(&self) -> usize {
        self.labels.len()
    }

    pub fn central_rank(&self) -> usize {
        self.central_rank
    }

    /// Length of a character coordinate vector: |S| + central rank.
    pub fn char_len(&self) -> usize {
        self.labels.len() + self.central_rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn cartan(&self) -> &[Vec<Int>] {
        &self.cartan
    }

    pub fn simple_root_char(&self, i: usize) -> Character {
        let mut c = Character::zero(self.char_len());
        c.coords[i] = Rat::one();
        c
    }

    /// Pairing of the i-th simple coroot with a character; central
    /// coordinates are ignored.
    pub fn cartan_pairing(&self, i: usize, chi: &Character) -> Result<Rat> {
        if i >= self.num_simple_roots() {
            return Err(Error::IndexOutOfRange(format!(
                "simple root index {i} of {}",
                self.num_simple_roots()
            )));
        }
        if chi.coords.len() != self.char_len() {
            return Err(Error::DimensionMismatch(format!(
                "character length {} vs {}",
                chi.coords.len(),
                self.char_len()
            )));
        }
        let mut s = Rat::zero();
        for (j, a) in self.cartan[i].iter().enumerate() {
            s += Rat::from_integer(a.clone()) * &chi.coords[j];
        }
        Ok(s)
    }

    pub fn are_orthogonal(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.num_simple_roots();
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange(format!(
                "simple root indices {i},{j} of {n}"
            )));
        }
        Ok(i != j && self.cartan[i][j].is_zero())
    }

    /// Canonical spec string, e.g. "A1xF4+C2".
    pub fn spec_string(&self) -> String {
        let mut s = self
            .factors
            .iter()
            .map(|&(l, r)| format!("{}{r}", l.as_char()))
            .collect::<Vec<_>>()
            .join("x");
        if self.central_rank > 0 {
            s.push_str(&format!("+C{}", self.central_rank));
        }
        s
    }

    /// Name of a character coordinate: a root label or a central label.
    pub fn coord_label(&self, j: usize) -> String {
        if j < self.labels.len() {
            self.labels[j].clone()
        } else {
            format!("c_{}", j - self.labels.len() + 1)
        }
    }
}

/// Render a character as a combination of simple roots and central
/// characters, e.g. `beta_2 + 2*beta_3 + beta_4` or `1/2*beta + 1/2*gamma`.
pub fn character_to_string(rs: &RootSystem, chi: &Character) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (j, c) in chi.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let label = rs.coord_label(j);
        let abs = if c < &Rat::zero() { -c.clone() } else { c.clone() };
        let coeff = if abs.is_one() {
            label
        } else if abs.is_integer() {
            format!("{}*{}", abs.numer(), label)
        } else {
            format!("{}/{}*{}", abs.numer(), abs.denom(), label)
        };
        if c < &Rat::zero() {
            parts.push(format!("- {coeff}"));
        } else if parts.is_empty() {
            parts.push(coeff);
        } else {
            parts.push(format!("+ {coeff}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}
