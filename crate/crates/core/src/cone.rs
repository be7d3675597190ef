//! Exact rational polyhedral cones with both descriptions kept in a
//! canonical form.
//!
//! A cone is stored as four lists: an HNF basis of its lineality lattice,
//! the primitive extreme rays of `C` intersected with the orthogonal
//! complement of the lineality space, and the same two lists for the dual
//! cone. With this normal form, structural equality coincides with
//! geometric equality and `dual` is a syntactic involution.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    dot_int, dot_int_rat, integer_kernel, is_zero_vec, neg_vec, primitive_from_rat,
    primitive_int, rat_vec, solve_rat, Int, Rat,
};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    ambient: usize,
    lin: Vec<Vec<Int>>,
    rays: Vec<Vec<Int>>,
    dual_lin: Vec<Vec<Int>>,
    dual_rays: Vec<Vec<Int>>,
}

/// Result of one double-description run: the lineality lattice of the
/// cone and the extreme rays of its pointed part.
struct DdOutput {
    lin: Vec<Vec<Int>>,
    rays: Vec<Vec<Int>>,
}

/// V-description of `{x : <a, x> >= 0 for all a in ineqs}` by the
/// incremental double description method, entirely over exact integers.
///
/// Invariants maintained per insertion: the current cone is
/// `span(lin) + cone(rays)`, `span(lin)` is exactly the kernel of the
/// inserted inequalities, `cone(rays)` maps to the extreme rays of the
/// pointed quotient, and `span(lin) ∩ span(rays) = 0`.
fn double_description(ineqs: &[Vec<Int>], ambient: usize) -> DdOutput {
    let mut active: Vec<Vec<Int>> = ineqs
        .iter()
        .filter(|a| !is_zero_vec(a))
        .cloned()
        .collect();
    active.sort();
    active.dedup();
    for a in &active {
        assert_eq!(a.len(), ambient, "double_description: ragged input");
    }

    let mut lin: Vec<Vec<Int>> = (0..ambient)
        .map(|i| {
            (0..ambient)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut inserted: Vec<Vec<Int>> = Vec::new();

    for a in &active {
        let lin_vals: Vec<Int> = lin.iter().map(|l| dot_int(a, l)).collect();
        if let Some(i0) = lin_vals.iter().position(|v| !v.is_zero()) {
            // The new inequality cuts the lineality space: one lineality
            // generator becomes a ray, everything else is projected into
            // the hyperplane of `a`.
            let mut l0 = lin.remove(i0);
            if dot_int(a, &l0).is_negative() {
                l0 = neg_vec(&l0);
            }
            let c0 = dot_int(a, &l0);
            for l in lin.iter_mut() {
                let c = dot_int(a, l);
                if !c.is_zero() {
                    let combo: Vec<Int> = l
                        .iter()
                        .zip(&l0)
                        .map(|(x, y)| x * &c0 - y * &c)
                        .collect();
                    *l = primitive_int(&combo).expect("projected lineality vector is nonzero");
                }
            }
            for r in rays.iter_mut() {
                let c = dot_int(a, r);
                if !c.is_zero() {
                    let combo: Vec<Int> = r
                        .iter()
                        .zip(&l0)
                        .map(|(x, y)| x * &c0 - y * &c)
                        .collect();
                    *r = primitive_int(&combo).expect("projected ray is nonzero");
                }
            }
            rays.push(l0);
        } else {
            let vals: Vec<Int> = rays.iter().map(|r| dot_int(a, r)).collect();
            if vals.iter().any(|v| v.is_negative()) {
                // zero sets w.r.t. all previously inserted inequalities
                let zsets: Vec<Vec<bool>> = rays
                    .iter()
                    .map(|r| inserted.iter().map(|b| dot_int(b, r).is_zero()).collect())
                    .collect();
                let pos: Vec<usize> = (0..rays.len())
                    .filter(|&i| vals[i].is_positive())
                    .collect();
                let neg: Vec<usize> = (0..rays.len())
                    .filter(|&i| vals[i].is_negative())
                    .collect();
                let mut next: Vec<Vec<Int>> = (0..rays.len())
                    .filter(|&i| !vals[i].is_negative())
                    .map(|i| rays[i].clone())
                    .collect();
                for &p in &pos {
                    for &n in &neg {
                        let zpn: Vec<bool> = zsets[p]
                            .iter()
                            .zip(&zsets[n])
                            .map(|(x, y)| *x && *y)
                            .collect();
                        let adjacent = !(0..rays.len()).any(|k| {
                            k != p
                                && k != n
                                && zpn.iter().zip(&zsets[k]).all(|(need, has)| !*need || *has)
                        });
                        if adjacent {
                            let combo: Vec<Int> = rays[n]
                                .iter()
                                .zip(&rays[p])
                                .map(|(x, y)| x * &vals[p] - y * &vals[n])
                                .collect();
                            next.push(
                                primitive_int(&combo).expect("combined ray is nonzero"),
                            );
                        }
                    }
                }
                rays = next;
            }
        }
        inserted.push(a.clone());
    }

    // canonical lineality: saturated HNF kernel of the inequality matrix
    let lin_canon = integer_kernel(&inserted, ambient).rows().to_vec();
    // canonical rays: project off the lineality space, primitivize, sort
    let mut rays_canon: Vec<Vec<Int>> = rays
        .iter()
        .map(|r| {
            let projected = project_off(&lin_canon, r);
            primitive_from_rat(&projected).expect("extreme ray projects to nonzero")
        })
        .collect();
    rays_canon.sort();
    rays_canon.dedup();
    DdOutput { lin: lin_canon, rays: rays_canon }
}

/// Orthogonal projection of `v` onto the complement of `span(basis)`.
fn project_off(basis: &[Vec<Int>], v: &[Int]) -> Vec<Rat> {
    if basis.is_empty() {
        return rat_vec(v);
    }
    let k = basis.len();
    let gram: Vec<Vec<Rat>> = basis
        .iter()
        .map(|bi| {
            basis
                .iter()
                .map(|bj| Rat::from_integer(dot_int(bi, bj)))
                .collect()
        })
        .collect();
    let rhs: Vec<Rat> = basis
        .iter()
        .map(|bi| Rat::from_integer(dot_int(bi, v)))
        .collect();
    let y = solve_rat(&gram, &rhs).expect("gram matrix of independent rows is invertible");
    let mut out = rat_vec(v);
    for i in 0..k {
        for (o, b) in out.iter_mut().zip(&basis[i]) {
            *o -= &y[i] * Rat::from_integer(b.clone());
        }
    }
    out
}

fn assemble(lin: &[Vec<Int>], rays: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = Vec::with_capacity(2 * lin.len() + rays.len());
    out.extend(lin.iter().cloned());
    out.extend(lin.iter().map(|l| neg_vec(l)));
    out.extend(rays.iter().cloned());
    out.sort();
    out
}

impl Cone {
    /// Cone spanned by the given integer vectors.
    pub fn from_generators(gens: &[Vec<Int>], ambient: usize) -> Result<Self> {
        let mut cleaned: Vec<Vec<Int>> = Vec::new();
        for g in gens {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "generator length {} vs ambient {}",
                    g.len(),
                    ambient
                )));
            }
            if let Some(p) = primitive_int(g) {
                cleaned.push(p);
            }
        }
        // dual first: C^v = {u : <u, g> >= 0}, then C = (C^v)^v
        let dual = double_description(&cleaned, ambient);
        let primal = double_description(&assemble(&dual.lin, &dual.rays), ambient);
        Ok(Cone {
            ambient,
            lin: primal.lin,
            rays: primal.rays,
            dual_lin: dual.lin,
            dual_rays: dual.rays,
        })
    }

    pub fn from_generators_rat(gens: &[Vec<Rat>], ambient: usize) -> Result<Self> {
        let ints: Vec<Vec<Int>> = gens
            .iter()
            .filter_map(|g| primitive_from_rat(g))
            .collect();
        for g in gens {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "generator length {} vs ambient {}",
                    g.len(),
                    ambient
                )));
            }
        }
        Self::from_generators(&ints, ambient)
    }

    /// Cone `{x : <a, x> >= 0 for all a in ineqs}`.
    pub fn from_inequalities(ineqs: &[Vec<Int>], ambient: usize) -> Result<Self> {
        for a in ineqs {
            if a.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "inequality length {} vs ambient {}",
                    a.len(),
                    ambient
                )));
            }
        }
        let primal = double_description(ineqs, ambient);
        let dual = double_description(&assemble(&primal.lin, &primal.rays), ambient);
        Ok(Cone {
            ambient,
            lin: primal.lin,
            rays: primal.rays,
            dual_lin: dual.lin,
            dual_rays: dual.rays,
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_generators(&[], ambient).expect("zero cone")
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_inequalities(&[], ambient).expect("full cone")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Canonical generating set: +-(lineality basis) together with the
    /// extreme rays of the pointed part, lexicographically sorted.
    pub fn generators(&self) -> Vec<Vec<Int>> {
        assemble(&self.lin, &self.rays)
    }

    /// Canonical H-description: facet functionals plus the +- pairs
    /// cutting out the linear span.
    pub fn facets(&self) -> Vec<Vec<Int>> {
        assemble(&self.dual_lin, &self.dual_rays)
    }

    pub fn lineality_basis(&self) -> &[Vec<Int>] {
        &self.lin
    }

    pub fn extreme_rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn span_normals(&self) -> &[Vec<Int>] {
        &self.dual_lin
    }

    pub fn facet_normals(&self) -> &[Vec<Int>] {
        &self.dual_rays
    }

    pub fn dual(&self) -> Cone {
        Cone {
            ambient: self.ambient,
            lin: self.dual_lin.clone(),
            rays: self.dual_rays.clone(),
            dual_lin: self.lin.clone(),
            dual_rays: self.rays.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.dual_lin.len()
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lin.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.lin.is_empty() && self.rays.is_empty()
    }

    fn check_dim(&self, v: &[Int]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs ambient {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Int]) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.dual_lin.iter().all(|f| dot_int(f, v).is_zero())
            && self.dual_rays.iter().all(|f| !dot_int(f, v).is_negative()))
    }

    pub fn contains_rat(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs ambient {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(self.dual_lin.iter().all(|f| dot_int_rat(f, v).is_zero())
            && self
                .dual_rays
                .iter()
                .all(|f| !dot_int_rat(f, v).is_negative()))
    }

    /// Exact relative-interior membership: the span equalities hold and
    /// every proper facet functional is strictly positive.
    pub fn in_relative_interior(&self, v: &[Int]) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.dual_lin.iter().all(|f| dot_int(f, v).is_zero())
            && self.dual_rays.iter().all(|f| dot_int(f, v).is_positive()))
    }

    /// A lattice point in the relative interior (sum of the extreme rays;
    /// the origin when the cone is a linear subspace).
    pub fn relative_interior_point(&self) -> Vec<Int> {
        let mut p = vec![Int::zero(); self.ambient];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let mut ineqs = self.facets();
        ineqs.extend(other.facets());
        Cone::from_inequalities(&ineqs, self.ambient)
    }

    /// Intersection with the subspace `{x : <e, x> = 0 for e in equations}`.
    pub fn intersect_subspace(&self, equations: &[Vec<Int>]) -> Result<Cone> {
        let mut ineqs = self.facets();
        for e in equations {
            if e.len() != self.ambient {
                return Err(Error::DimensionMismatch(format!(
                    "equation length {} vs ambient {}",
                    e.len(),
                    self.ambient
                )));
            }
            ineqs.push(e.clone());
            ineqs.push(neg_vec(e));
        }
        Cone::from_inequalities(&ineqs, self.ambient)
    }

    /// Image under a linear map given by its rows (output coordinates).
    pub fn linear_image(&self, rows: &[Vec<Rat>]) -> Result<Cone> {
        let out_dim = rows.len();
        for row in rows {
            if row.len() != self.ambient {
                return Err(Error::DimensionMismatch(format!(
                    "matrix row length {} vs ambient {}",
                    row.len(),
                    self.ambient
                )));
            }
        }
        let images: Vec<Vec<Rat>> = self
            .generators()
            .iter()
            .map(|g| rows.iter().map(|row| dot_int_rat(g, row)).collect())
            .collect();
        Cone::from_generators_rat(&images, out_dim)
    }

    pub fn linear_image_int(&self, rows: &[Vec<Int>]) -> Result<Cone> {
        let rat_rows: Vec<Vec<Rat>> = rows.iter().map(|r| rat_vec(r)).collect();
        self.linear_image(&rat_rows)
    }

    /// All faces of the cone, including the minimal face and the cone
    /// itself, in canonical order.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: std::collections::BTreeSet<Cone> = std::collections::BTreeSet::new();
        let mut queue = vec![self.clone()];
        seen.insert(self.clone());
        while let Some(face) = queue.pop() {
            for f in face.facet_normals() {
                let mut ineqs = face.facets();
                ineqs.push(f.clone());
                ineqs.push(neg_vec(f));
                let cut = Cone::from_inequalities(&ineqs, self.ambient)
                    .expect("face cut has consistent dimensions");
                if seen.insert(cut.clone()) {
                    queue.push(cut);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Whether `face` is a face of `self`, decided exactly: `face` must be
    /// contained in `self` and equal the smallest face of `self` containing
    /// it (cut out by the facets tight on all of `face`).
    pub fn is_face_of(face: &Cone, cone: &Cone) -> Result<bool> {
        if face.ambient != cone.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                face.ambient, cone.ambient
            )));
        }
        let gens = face.generators();
        for g in &gens {
            if !cone.contains(g)? {
                return Ok(false);
            }
        }
        let mut ineqs = cone.facets();
        for f in cone.facet_normals() {
            if gens.iter().all(|g| dot_int(f, g).is_zero()) {
                ineqs.push(neg_vec(f));
            }
        }
        let smallest = Cone::from_inequalities(&ineqs, cone.ambient)?;
        Ok(&smallest == face)
    }

    /// Whether some point lies in the relative interiors of both cones and
    /// in `within`. Decided exactly: any strict functional of either cone
    /// that is positive somewhere on `D = C1 ∩ C2 ∩ within` is positive at
    /// a relative interior point of `D`.
    pub fn rel_interiors_meet_within(c1: &Cone, c2: &Cone, within: &Cone) -> Result<bool> {
        if c1.ambient != c2.ambient || c1.ambient != within.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {} vs {}",
                c1.ambient, c2.ambient, within.ambient
            )));
        }
        let d = c1.intersect(c2)?.intersect(within)?;
        let sample = d.relative_interior_point();
        Ok(c1
            .facet_normals()
            .iter()
            .chain(c2.facet_normals())
            .all(|f| dot_int(f, &sample).is_positive()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    fn gens(vs: &[&[i64]]) -> Vec<Vec<Int>> {
        vs.iter().map(|v| int_vec(v)).collect()
    }

    fn cone_of(vs: &[&[i64]], dim: usize) -> Cone {
        Cone::from_generators(&gens(vs), dim).unwrap()
    }

    #[test]
    fn first_quadrant_is_self_dual() {
        let q = cone_of(&[&[1, 0], &[0, 1]], 2);
        assert_eq!(q.extreme_rays(), &gens(&[&[0, 1], &[1, 0]])[..]);
        assert_eq!(q.facet_normals(), &gens(&[&[0, 1], &[1, 0]])[..]);
        assert_eq!(q.dual(), q);
    }

    #[test]
    fn zero_cone_in_q3() {
        let z = cone_of(&[], 3);
        assert!(z.is_zero());
        assert_eq!(z.dim(), 0);
        // full set of +- coordinate facets
        assert_eq!(
            z.facets(),
            gens(&[
                &[-1, 0, 0],
                &[0, -1, 0],
                &[0, 0, -1],
                &[0, 0, 1],
                &[0, 1, 0],
                &[1, 0, 0]
            ])
        );
        assert!(z.in_relative_interior(&int_vec(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn colored_cone_generators_from_f4_example() {
        let c = cone_of(&[&[-1, 1, -1, 0], &[0, -1, 1, -1]], 4);
        assert!(c.is_strictly_convex());
        assert_eq!(c.dim(), 2);
        assert_eq!(
            c.extreme_rays(),
            &gens(&[&[-1, 1, -1, 0], &[0, -1, 1, -1]])[..]
        );
    }

    #[test]
    fn dual_of_negative_sigma_cone_is_valuation_cone() {
        // sigma = {e1, e2} inside rank 3; V = dual(cone(-sigma))
        let v = cone_of(&[&[-1, 0, 0], &[0, -1, 0]], 3).dual();
        assert_eq!(
            v.generators(),
            gens(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, -1], &[0, 0, 1]])
        );
        // both inclusions, by pairing all generators
        for g in v.generators() {
            for s in [int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0])] {
                assert!(!dot_int(&g, &s).is_positive());
            }
        }
        assert_eq!(v.dual(), cone_of(&[&[-1, 0, 0], &[0, -1, 0]], 3));
        assert!(!v.is_strictly_convex());
    }

    #[test]
    fn dual_of_full_space_is_zero_cone() {
        let full = Cone::full(3);
        assert_eq!(full.dual(), Cone::zero(3));
        assert_eq!(full.dim(), 3);
        assert!(full.contains(&int_vec(&[5, -7, 2])).unwrap());
    }

    #[test]
    fn face_counts() {
        let q = cone_of(&[&[1, 0], &[0, 1]], 2);
        assert_eq!(q.faces().len(), 4);
        let simplicial = cone_of(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(simplicial.faces().len(), 8);
        assert_eq!(Cone::zero(2).faces().len(), 1);
    }

    #[test]
    fn is_face_examples() {
        let big = cone_of(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], 3);
        let ray = cone_of(&[&[0, 0, 1]], 3);
        assert!(Cone::is_face_of(&ray, &big).unwrap());
        // witness functional u = (1,-2,0): nonnegative on all generators,
        // vanishing exactly on the e3 ray
        let u = int_vec(&[1, -2, 0]);
        for g in big.generators() {
            assert!(!dot_int(&u, &g).is_negative());
        }
        assert!(dot_int(&u, &int_vec(&[0, 0, 1])).is_zero());

        let q = cone_of(&[&[1, 0], &[0, 1]], 2);
        assert!(Cone::is_face_of(&cone_of(&[&[1, 0]], 2), &q).unwrap());
        assert!(!Cone::is_face_of(&cone_of(&[&[1, 1]], 2), &q).unwrap());
    }

    #[test]
    fn relative_interior_examples() {
        let c = cone_of(&[&[-1, -1, 0], &[0, 0, 1]], 3);
        assert!(c.in_relative_interior(&int_vec(&[-1, -1, 1])).unwrap());
        let q = cone_of(&[&[1, 0], &[0, 1]], 2);
        assert!(!q.in_relative_interior(&int_vec(&[1, 0])).unwrap());
        assert!(q.in_relative_interior(&int_vec(&[1, 1])).unwrap());
    }

    #[test]
    fn intersect_with_subspace_f4_trace() {
        // cone(sigma) = first orthant of Q^4; M0 spans are cut out by the
        // colored cone's generators
        let orthant = cone_of(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]], 4);
        let trace = orthant
            .intersect_subspace(&gens(&[&[-1, 1, -1, 0], &[0, -1, 1, -1]]))
            .unwrap();
        assert_eq!(trace.extreme_rays(), &gens(&[&[0, 1, 1, 0]])[..]);

        let trace2 = orthant
            .intersect_subspace(&gens(&[&[0, -1, 1, -1], &[0, 0, -1, 1]]))
            .unwrap();
        assert_eq!(
            trace2.extreme_rays(),
            &gens(&[&[0, 0, 1, 1], &[1, 0, 0, 0]])[..]
        );
    }

    #[test]
    fn intersect_with_full_space_is_identity() {
        let c = cone_of(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], 3);
        assert_eq!(c.intersect(&Cone::full(3)).unwrap(), c);
    }

    #[test]
    fn linear_image_examples() {
        // V = {v1 <= 0, v2 <= 0} in Q^3 projected onto first two duals
        let v = cone_of(&[&[-1, 0, 0], &[0, -1, 0]], 3).dual();
        let pi = gens(&[&[1, 0, 0], &[0, 1, 0]]);
        let image = v.linear_image_int(&pi).unwrap();
        assert_eq!(image, cone_of(&[&[-1, 0], &[0, -1]], 2));

        let c = cone_of(&[&[-1, -1, 0], &[0, 0, 1]], 3);
        let identity = gens(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(c.linear_image_int(&identity).unwrap(), c);

        assert_eq!(
            Cone::zero(3).linear_image_int(&pi).unwrap(),
            Cone::zero(2)
        );
    }

    #[test]
    fn strict_convexity_and_dim() {
        assert!(!cone_of(&[&[1, 0], &[-1, 0]], 2).is_strictly_convex());
        let v = cone_of(&[&[-1, 0, 0], &[0, -1, 0]], 3).dual();
        assert!(!v.is_strictly_convex());
        let c = cone_of(&[&[-1, 1, -1, 0], &[0, -1, 1, -1]], 4);
        assert!(c.is_strictly_convex());
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn rel_interiors_meet_examples() {
        let v = cone_of(&[&[-1, 0, 0], &[0, -1, 0]], 3).dual();
        let e3 = cone_of(&[&[0, 0, 1]], 3);
        assert!(Cone::rel_interiors_meet_within(&e3, &e3, &v).unwrap());

        let c1 = cone_of(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], 3);
        let c2 = cone_of(&[&[-1, -1, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert!(!Cone::rel_interiors_meet_within(&c1, &c2, &v).unwrap());
        // shared points lie in the common face
        assert_eq!(
            c1.intersect(&c2).unwrap(),
            cone_of(&[&[-1, -1, 0], &[0, 0, 1]], 3)
        );

        let z = Cone::zero(2);
        assert!(Cone::rel_interiors_meet_within(&z, &z, &Cone::full(2)).unwrap());
    }

    #[test]
    fn generator_membership_and_interior_sum() {
        let c = cone_of(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], 3);
        for g in c.generators() {
            assert!(c.contains(&g).unwrap());
        }
        assert!(c
            .in_relative_interior(&c.relative_interior_point())
            .unwrap());
    }

    #[test]
    fn faces_closed_under_intersection_and_face_test() {
        let c = cone_of(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], 3);
        let faces = c.faces();
        for f in &faces {
            assert!(Cone::is_face_of(f, &c).unwrap());
            for g in &faces {
                let meet = f.intersect(g).unwrap();
                assert!(faces.contains(&meet));
            }
        }
    }

    #[test]
    fn ambient_zero_is_supported() {
        let z = Cone::zero(0);
        assert_eq!(z, Cone::full(0));
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&[]).unwrap());
        assert!(z.in_relative_interior(&[]).unwrap());
        assert_eq!(z.faces().len(), 1);
    }
}
