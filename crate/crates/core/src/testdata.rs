//! Reference data shared by the unit tests: the worked examples used
//! throughout the crate (SL2/T, SL2/N, the doubled color, the SL2 x F4
//! space, and the (SL2)^4 space with its complete fan).

use crate::cone::Cone;
use crate::datum::HomogeneousSphericalDatum;
use crate::fan::{complete_fan, ColoredCone, ColoredFan};
use crate::linalg::{int_vec, rat, Int};
use crate::roots::parse_root_system;

/// SL2/T: M = Z*alpha, Sigma = {alpha}, two a-colors with rho = 1.
pub fn datum_a_to_b() -> HomogeneousSphericalDatum {
    let rs = parse_root_system("A1").unwrap();
    HomogeneousSphericalDatum {
        root_system: rs.clone(),
        m_basis: vec![rs.simple_root_char(0)],
        sigma: vec![int_vec(&[1])],
        s_p: vec![],
        colors_a: vec![
            ("D'".to_string(), int_vec(&[1])),
            ("D''".to_string(), int_vec(&[1])),
        ],
    }
}

/// SL2/N: M = Z*(2 alpha), Sigma = {2 alpha}.
pub fn datum_2a_to_b() -> HomogeneousSphericalDatum {
    let rs = parse_root_system("A1").unwrap();
    HomogeneousSphericalDatum {
        root_system: rs.clone(),
        m_basis: vec![rs.simple_root_char(0).scaled(&rat(2, 1))],
        sigma: vec![int_vec(&[1])],
        s_p: vec![],
        colors_a: vec![],
    }
}

/// (SL2 x SL2)/N(diag): M = Z*(alpha + beta), Sigma = {alpha + beta}.
pub fn datum_doubling() -> HomogeneousSphericalDatum {
    let rs = parse_root_system("A1xA1").unwrap();
    HomogeneousSphericalDatum {
        root_system: rs.clone(),
        m_basis: vec![rs.simple_root_char(0).add(&rs.simple_root_char(1))],
        sigma: vec![int_vec(&[1])],
        s_p: vec![],
        colors_a: vec![],
    }
}

/// The SL2 x F4 space; Sigma is the standard basis of M.
pub fn datum_f4() -> HomogeneousSphericalDatum {
    let rs = parse_root_system("A1xF4").unwrap();
    let chars = [
        rs.simple_root_char(0),
        rs.simple_root_char(1),
        rs.simple_root_char(2).add(&rs.simple_root_char(3)),
        rs.simple_root_char(3).add(&rs.simple_root_char(4)),
    ];
    HomogeneousSphericalDatum {
        root_system: rs,
        m_basis: chars.to_vec(),
        sigma: vec![
            int_vec(&[1, 0, 0, 0]),
            int_vec(&[0, 1, 0, 0]),
            int_vec(&[0, 0, 1, 0]),
            int_vec(&[0, 0, 0, 1]),
        ],
        s_p: vec![],
        colors_a: vec![
            ("D'".to_string(), int_vec(&[1, -1, 0, 0])),
            ("D''".to_string(), int_vec(&[1, 1, 0, 0])),
            ("D'''".to_string(), int_vec(&[-1, 1, -1, 0])),
        ],
    }
}

/// The (SL2)^4 space: M spanned by alpha, (beta+gamma)/2, delta/2.
pub fn datum_clfan() -> HomogeneousSphericalDatum {
    let rs = parse_root_system("A1xA1xA1xA1").unwrap();
    let half = rat(1, 2);
    HomogeneousSphericalDatum {
        root_system: rs.clone(),
        m_basis: vec![
            rs.simple_root_char(0),
            rs.simple_root_char(1)
                .add(&rs.simple_root_char(2))
                .scaled(&half),
            rs.simple_root_char(3).scaled(&half),
        ],
        sigma: vec![int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0])],
        s_p: vec![],
        colors_a: vec![
            ("D'".to_string(), int_vec(&[1, 0, 0])),
            ("D''".to_string(), int_vec(&[1, 0, 0])),
        ],
    }
}

pub fn cc(gens: &[&[i64]], colors: &[&str], ambient: usize) -> ColoredCone {
    let gens: Vec<Vec<Int>> = gens.iter().map(|g| int_vec(g)).collect();
    ColoredCone::new(
        Cone::from_generators(&gens, ambient).unwrap(),
        colors.iter().map(|s| s.to_string()).collect(),
    )
}

/// The four maximal cones of the complete colored fan on `datum_clfan`.
pub fn clfan_maximal() -> Vec<ColoredCone> {
    vec![
        cc(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, 1]], &["D'", "D_b(delta)"], 3),
        cc(&[&[-1, -1, 0], &[1, 0, 0], &[0, 0, -1]], &["D'"], 3),
        cc(
            &[&[-1, -1, 0], &[0, 1, 0], &[0, 0, 1]],
            &["D_b(beta,gamma)", "D_b(delta)"],
            3,
        ),
        cc(&[&[-1, -1, 0], &[0, 1, 0], &[0, 0, -1]], &["D_b(beta,gamma)"], 3),
    ]
}

pub fn clfan_fan() -> (HomogeneousSphericalDatum, ColoredFan) {
    let datum = datum_clfan();
    let fan = complete_fan(&datum, &clfan_maximal()).unwrap();
    (datum, fan)
}

/// The single-maximal-cone fan of the F4 example with F = {D''', D_b(beta_2)}.
pub fn f4_fan_l() -> (HomogeneousSphericalDatum, ColoredFan, ColoredCone) {
    let datum = datum_f4();
    let top = cc(
        &[&[-1, 1, -1, 0], &[0, -1, 1, -1]],
        &["D'''", "D_b(beta_2)"],
        4,
    );
    let fan = complete_fan(&datum, std::slice::from_ref(&top)).unwrap();
    (datum, fan, top)
}

/// Same datum with F = {D_b(beta_2), D_b(beta_4)}.
pub fn f4_fan_new_root() -> (HomogeneousSphericalDatum, ColoredFan, ColoredCone) {
    let datum = datum_f4();
    let top = cc(
        &[&[0, -1, 1, -1], &[0, 0, -1, 1]],
        &["D_b(beta_2)", "D_b(beta_4)"],
        4,
    );
    let fan = complete_fan(&datum, std::slice::from_ref(&top)).unwrap();
    (datum, fan, top)
}
