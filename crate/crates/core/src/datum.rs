//! The homogeneous spherical datum `(M, Sigma, S^p, D^a)`, its validity
//! checks, the valuation cone, and the recovery of the full color set.
//!
//! Validation covers exactly the necessary conditions a homogeneous
//! spherical datum must satisfy at the combinatorial level; it does not
//! attempt the full Luna axiom system. A clean report therefore means
//! "paper-level checks passed", nothing stronger.

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use crate::cone::Cone;
use crate::error::{Error, Result, ValidationReport};
use crate::linalg::{dot_int, rank_rat, vec_gcd, Int, Rat};
use crate::roots::{Character, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSphericalDatum {
    pub root_system: RootSystem,
    /// Z-basis of M, as characters of the Borel subgroup.
    pub m_basis: Vec<Character>,
    /// Spherical roots in M-coordinates (with respect to `m_basis`).
    pub sigma: Vec<Vec<Int>>,
    /// Simple-root indices of S^p, sorted.
    pub s_p: Vec<usize>,
    /// Type-a colors: name and rho in the dual basis of `m_basis`.
    pub colors_a: Vec<(String, Vec<Int>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ColorKind {
    A,
    TwoA,
    B1,
    B2,
}

impl std::fmt::Display for ColorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ColorKind::A => "a",
            ColorKind::TwoA => "2a",
            ColorKind::B1 => "b1",
            ColorKind::B2 => "b2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub name: String,
    pub kind: ColorKind,
    pub rho: Vec<Int>,
    /// Simple-root indices of varsigma(D), sorted.
    pub varsigma: Vec<usize>,
}

/// The full set of colors of a datum, with the derived moved-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSet {
    colors: Vec<Color>,
}

impl ColorSet {
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, name: &str) -> Option<&Color> {
        self.colors.iter().find(|c| c.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&Color> {
        self.get(name)
            .ok_or_else(|| Error::UnknownColor(name.to_string()))
    }

    /// D(alpha): the colors moved by the minimal parabolic of root `i`.
    pub fn moved(&self, i: usize) -> Vec<&Color> {
        self.colors
            .iter()
            .filter(|c| c.varsigma.contains(&i))
            .collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.colors.iter().map(|c| c.name.clone()).collect()
    }
}

impl HomogeneousSphericalDatum {
    pub fn rank(&self) -> usize {
        self.m_basis.len()
    }

    /// Character of a vector of M-coordinates.
    pub fn char_of_mcoords(&self, coords: &[Int]) -> Character {
        let mut chi = Character::zero(self.root_system.char_len());
        for (c, basis) in coords.iter().zip(&self.m_basis) {
            let scaled = basis.scaled(&Rat::from_integer(c.clone()));
            chi = chi.add(&scaled);
        }
        chi
    }

    pub fn sigma_char(&self, k: usize) -> Character {
        self.char_of_mcoords(&self.sigma[k])
    }

    pub fn sigma_chars(&self) -> Vec<Character> {
        (0..self.sigma.len()).map(|k| self.sigma_char(k)).collect()
    }

    /// Index into `sigma` of the spherical root equal to simple root `i`.
    pub fn simple_in_sigma(&self, i: usize) -> Option<usize> {
        let target = self.root_system.simple_root_char(i);
        (0..self.sigma.len()).find(|&k| self.sigma_char(k) == target)
    }

    /// Index into `sigma` of the spherical root equal to twice simple root `i`.
    pub fn double_in_sigma(&self, i: usize) -> Option<usize> {
        let target = self
            .root_system
            .simple_root_char(i)
            .scaled(&Rat::from_integer(Int::from(2)));
        (0..self.sigma.len()).find(|&k| self.sigma_char(k) == target)
    }

    /// Restriction of the i-th simple coroot to M, in the dual basis of
    /// `m_basis` (rational; integrality is a validity condition).
    pub fn coroot_on_m(&self, i: usize) -> Result<Vec<Rat>> {
        self.m_basis
            .iter()
            .map(|b| self.root_system.cartan_pairing(i, b))
            .collect()
    }

    /// Whether simple roots i and j are orthogonal with character sum in
    /// `Sigma ∪ 2*Sigma` (the existence condition for a b2 color).
    pub fn are_b2_partners(&self, i: usize, j: usize) -> Result<bool> {
        if !self.root_system.are_orthogonal(i, j)? {
            return Ok(false);
        }
        let sum = self
            .root_system
            .simple_root_char(i)
            .add(&self.root_system.simple_root_char(j));
        let two = Rat::from_integer(Int::from(2));
        Ok(self
            .sigma_chars()
            .iter()
            .any(|s| *s == sum || s.scaled(&two) == sum))
    }
}

/// The valuation cone `V = {v : <v, gamma> <= 0 for all gamma in Sigma}`,
/// the dual of the cone spanned by `-Sigma` in N_Q.
pub fn valuation_cone(datum: &HomogeneousSphericalDatum) -> Result<Cone> {
    let neg: Vec<Vec<Int>> = datum.sigma.iter().map(|s| s.iter().map(|x| -x).collect()).collect();
    Ok(Cone::from_generators(&neg, datum.rank())?.dual())
}

fn rat_is_int_vec(v: &[Rat]) -> Option<Vec<Int>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.numer().clone()))
        .collect()
}

/// Recover the full color set; all problems are collected rather than
/// returned at the first failure.
fn try_recover_colors(
    datum: &HomogeneousSphericalDatum,
) -> std::result::Result<ColorSet, Vec<String>> {
    let rs = &datum.root_system;
    let n = rs.num_simple_roots();
    let mut problems: Vec<String> = Vec::new();
    let mut colors: Vec<Color> = Vec::new();

    for (k, s) in datum.sigma.iter().enumerate() {
        if s.len() != datum.rank() {
            return Err(vec![format!(
                "sigma[{k}] has length {} but rank(M) = {}",
                s.len(),
                datum.rank()
            )]);
        }
    }

    // type a: rho is input data, varsigma is derived
    for (name, rho) in &datum.colors_a {
        if rho.len() != datum.rank() {
            problems.push(format!(
                "color {name}: rho has length {} but rank(M) = {}",
                rho.len(),
                datum.rank()
            ));
            continue;
        }
        let mut varsigma = Vec::new();
        for i in 0..n {
            if let Some(k) = datum.simple_in_sigma(i) {
                if dot_int(rho, &datum.sigma[k]).is_one() {
                    varsigma.push(i);
                }
            }
        }
        colors.push(Color {
            name: name.clone(),
            kind: ColorKind::A,
            rho: rho.clone(),
            varsigma,
        });
    }

    // type 2a: one color per simple root with 2*alpha in Sigma
    for i in 0..n {
        if datum.double_in_sigma(i).is_none() {
            continue;
        }
        let name = format!("D_2a({})", rs.label(i));
        match datum.coroot_on_m(i) {
            Ok(coroot) => {
                let half: Vec<Rat> = coroot
                    .iter()
                    .map(|x| x / Rat::from_integer(Int::from(2)))
                    .collect();
                match rat_is_int_vec(&half) {
                    Some(rho) => colors.push(Color {
                        name,
                        kind: ColorKind::TwoA,
                        rho,
                        varsigma: vec![i],
                    }),
                    None => problems.push(format!(
                        "non-integral rho: (1/2){}^vee restricted to M is not in N",
                        rs.label(i)
                    )),
                }
            }
            Err(e) => problems.push(e.to_string()),
        }
    }

    // b2 partners
    let mut partners: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match datum.are_b2_partners(i, j) {
                Ok(true) => partners.push((i, j)),
                Ok(false) => {}
                Err(e) => problems.push(e.to_string()),
            }
        }
    }
    for &(i, j) in &partners {
        let name = format!("D_b({},{})", rs.label(i), rs.label(j));
        let ci = datum.coroot_on_m(i).map_err(|e| vec![e.to_string()])?;
        let cj = datum.coroot_on_m(j).map_err(|e| vec![e.to_string()])?;
        if ci != cj {
            problems.push(format!(
                "b2 color {name}: {}^vee|_M differs from {}^vee|_M",
                rs.label(i),
                rs.label(j)
            ));
        }
        match rat_is_int_vec(&ci) {
            Some(rho) => colors.push(Color {
                name,
                kind: ColorKind::B2,
                rho,
                varsigma: vec![i, j],
            }),
            None => problems.push(format!(
                "non-integral rho: {}^vee restricted to M is not in N",
                rs.label(i)
            )),
        }
    }

    // b1: simple roots outside S^p, Sigma, (1/2)Sigma, with no partner
    for i in 0..n {
        if datum.s_p.contains(&i)
            || datum.simple_in_sigma(i).is_some()
            || datum.double_in_sigma(i).is_some()
            || partners.iter().any(|&(a, b)| a == i || b == i)
        {
            continue;
        }
        let name = format!("D_b({})", rs.label(i));
        match datum.coroot_on_m(i) {
            Ok(coroot) => match rat_is_int_vec(&coroot) {
                Some(rho) => colors.push(Color {
                    name,
                    kind: ColorKind::B1,
                    rho,
                    varsigma: vec![i],
                }),
                None => problems.push(format!(
                    "non-integral rho: {}^vee restricted to M is not in N",
                    rs.label(i)
                )),
            },
            Err(e) => problems.push(e.to_string()),
        }
    }

    // name uniqueness, including generated vs user-chosen names
    let mut seen = BTreeSet::new();
    for c in &colors {
        if !seen.insert(c.name.clone()) {
            problems.push(format!("duplicate color name {}", c.name));
        }
    }

    if problems.is_empty() {
        Ok(ColorSet { colors })
    } else {
        Err(problems)
    }
}

/// Every necessary condition on the quadruple, as a report.
pub fn validate_datum(datum: &HomogeneousSphericalDatum) -> ValidationReport {
    let mut report = ValidationReport::new();
    let rs = &datum.root_system;
    let n = rs.num_simple_roots();
    let rank = datum.rank();

    for (i, b) in datum.m_basis.iter().enumerate() {
        if b.coords.len() != rs.char_len() {
            report.push(format!(
                "m_basis row {i} has length {} but |S| + central rank = {}",
                b.coords.len(),
                rs.char_len()
            ));
            return report;
        }
    }
    let basis_rows: Vec<Vec<Rat>> = datum.m_basis.iter().map(|b| b.coords.clone()).collect();
    if rank_rat(&basis_rows) != rank {
        report.push("m_basis rows are linearly dependent".to_string());
    }

    for (k, s) in datum.sigma.iter().enumerate() {
        if s.len() != rank {
            report.push(format!(
                "sigma[{k}] has length {} but rank(M) = {rank}",
                s.len()
            ));
            return report;
        }
        if !vec_gcd(s).is_one() {
            report.push(format!("sigma[{k}] is not primitive in M"));
        }
    }
    let sigma_rows: Vec<Vec<Rat>> = datum
        .sigma
        .iter()
        .map(|s| s.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    if rank_rat(&sigma_rows) != datum.sigma.len() {
        report.push(format!(
            "sigma is linearly dependent: {} vectors of rank {}",
            datum.sigma.len(),
            rank_rat(&sigma_rows)
        ));
    }
    // alpha in Sigma and 2*alpha in Sigma cannot both hold
    let chars = datum.sigma_chars();
    let two = Rat::from_integer(Int::from(2));
    for (k, c) in chars.iter().enumerate() {
        for (l, d) in chars.iter().enumerate() {
            if k != l && c.scaled(&two) == *d {
                report.push(format!(
                    "sigma[{l}] equals twice sigma[{k}], violating primitivity of Sigma"
                ));
            }
        }
    }

    for &i in &datum.s_p {
        if i >= n {
            report.push(format!("s_p contains invalid simple-root index {i}"));
            return report;
        }
    }

    let mut user_names = BTreeSet::new();
    for (name, _) in &datum.colors_a {
        if !user_names.insert(name.clone()) {
            report.push(format!("duplicate color name {name}"));
        }
    }

    // per-root conditions on the type-a colors
    for i in 0..n {
        let Some(k) = datum.simple_in_sigma(i) else { continue };
        let movers: Vec<&(String, Vec<Int>)> = datum
            .colors_a
            .iter()
            .filter(|(_, rho)| rho.len() == rank && dot_int(rho, &datum.sigma[k]).is_positive())
            .collect();
        if movers.len() != 2 {
            report.push(format!(
                "{} lies in Sigma but {} type-a colors pair positively with it (need exactly 2)",
                rs.label(i),
                movers.len()
            ));
            continue;
        }
        match datum.coroot_on_m(i) {
            Ok(coroot) => {
                let sum: Vec<Rat> = (0..rank)
                    .map(|j| {
                        Rat::from_integer(movers[0].1[j].clone())
                            + Rat::from_integer(movers[1].1[j].clone())
                    })
                    .collect();
                if sum != coroot {
                    let fmt = |v: &[Rat]| {
                        v.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    report.push(format!(
                        "rho({}) + rho({}) = ({}) differs from {}^vee|_M = ({})",
                        movers[0].0,
                        movers[1].0,
                        fmt(&sum),
                        rs.label(i),
                        fmt(&coroot)
                    ));
                }
            }
            Err(e) => report.push(e.to_string()),
        }
    }

    // <rho(D), gamma> <= 1 for all a-colors, with equality only at simple
    // spherical roots (where it lands in varsigma(D))
    let simple_sigma: BTreeSet<usize> =
        (0..n).filter_map(|i| datum.simple_in_sigma(i)).collect();
    for (name, rho) in &datum.colors_a {
        if rho.len() != rank {
            report.push(format!(
                "color {name}: rho has length {} but rank(M) = {rank}",
                rho.len()
            ));
            continue;
        }
        for (k, s) in datum.sigma.iter().enumerate() {
            let p = dot_int(rho, s);
            if p > Int::one() {
                report.push(format!(
                    "<rho({name}), sigma[{k}]> = {p} exceeds 1"
                ));
            } else if p.is_one() && !simple_sigma.contains(&k) {
                report.push(format!(
                    "<rho({name}), sigma[{k}]> = 1 but sigma[{k}] is not a simple root"
                ));
            }
        }
    }

    // recovery-level problems (integrality, b2 consistency, name clashes)
    match try_recover_colors(datum) {
        Ok(colors) => {
            // a-colors must actually be moved by some simple spherical root
            for c in colors.colors() {
                if c.kind == ColorKind::A && c.varsigma.is_empty() {
                    report.push(format!(
                        "type-a color {} pairs to 1 with no simple spherical root",
                        c.name
                    ));
                }
            }
            // |D(alpha)| <= 2, with 2 exactly at simple spherical roots
            for i in 0..n {
                let moved = colors.moved(i);
                let expected = if datum.simple_in_sigma(i).is_some() { 2 } else { 1 };
                if moved.len() > expected {
                    report.push(format!(
                        "{} moves {} colors, at most {expected} allowed",
                        rs.label(i),
                        moved.len()
                    ));
                }
            }
            // S^p must equal the unmoved simple roots
            let moved_union: BTreeSet<usize> = colors
                .colors()
                .iter()
                .flat_map(|c| c.varsigma.iter().copied())
                .collect();
            let derived: Vec<usize> = (0..n).filter(|i| !moved_union.contains(i)).collect();
            let declared: Vec<usize> = {
                let mut v = datum.s_p.clone();
                v.sort_unstable();
                v.dedup();
                v
            };
            if derived != declared {
                let show = |ix: &[usize]| {
                    ix.iter()
                        .map(|&i| rs.label(i).to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                report.push(format!(
                    "S^p = {{{}}} differs from S minus the moved roots = {{{}}}",
                    show(&declared),
                    show(&derived)
                ));
            }
        }
        Err(problems) => {
            for p in problems {
                report.push(p);
            }
        }
    }

    report
}

/// The full set of colors `D = D^a ⊔ D^{2a} ⊔ D^{b1} ⊔ D^{b2}` with rho
/// and varsigma. Fails on an invalid datum.
pub fn full_colors(datum: &HomogeneousSphericalDatum) -> Result<ColorSet> {
    match try_recover_colors(datum) {
        Ok(colors) => {
            let report = validate_datum(datum);
            if report.is_valid() {
                Ok(colors)
            } else {
                Err(Error::InvalidDatum(report.to_string()))
            }
        }
        Err(problems) => {
            if let Some(p) = problems.iter().find(|p| p.starts_with("non-integral rho")) {
                Err(Error::NonIntegralRho(p.clone()))
            } else {
                Err(Error::InvalidDatum(problems.join("\n")))
            }
        }
    }
}
