//! The on-disk document format: a strict TOML subset holding one
//! homogeneous spherical datum and the maximal colored cones of a fan.
//! See docs/FORMAT.md for the field-by-field description.

use num_traits::One;

use crate::datum::HomogeneousSphericalDatum;
use crate::error::{Error, Result};
use crate::fan::{complete_fan, ColoredCone, ColoredFan};
use crate::linalg::{Int, Rat};
use crate::roots::{parse_root_system, Character};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSpec {
    pub generators: Vec<Vec<Int>>,
    pub colors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub datum: HomogeneousSphericalDatum,
    /// The maximal colored cones exactly as listed in the file.
    pub maximal: Vec<ConeSpec>,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn as_table(value: &toml::Value, what: &str) -> Result<toml::Table> {
    value
        .as_table()
        .cloned()
        .ok_or_else(|| doc_err(format!("{what} must be a table")))
}

fn as_array<'a>(value: &'a toml::Value, what: &str) -> Result<&'a [toml::Value]> {
    value
        .as_array()
        .map(|a| a.as_slice())
        .ok_or_else(|| doc_err(format!("{what} must be an array")))
}

fn parse_rat(value: &toml::Value, what: &str) -> Result<Rat> {
    match value {
        toml::Value::Integer(n) => Ok(Rat::from_integer(Int::from(*n))),
        toml::Value::String(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), Some(d.trim())),
                None => (s, None),
            };
            let n: Int = num
                .parse()
                .map_err(|_| doc_err(format!("{what}: bad rational '{s}'")))?;
            let d: Int = match den {
                Some(d) => d
                    .parse()
                    .map_err(|_| doc_err(format!("{what}: bad rational '{s}'")))?,
                None => Int::one(),
            };
            if d == Int::from(0) {
                return Err(doc_err(format!("{what}: zero denominator in '{s}'")));
            }
            Ok(Rat::new(n, d))
        }
        _ => Err(doc_err(format!("{what} must be an integer or a 'p/q' string"))),
    }
}

fn parse_int(value: &toml::Value, what: &str) -> Result<Int> {
    let r = parse_rat(value, what)?;
    if !r.is_integer() {
        return Err(doc_err(format!("{what} must be an integer")));
    }
    Ok(r.numer().clone())
}

fn parse_int_vec(value: &toml::Value, what: &str) -> Result<Vec<Int>> {
    as_array(value, what)?
        .iter()
        .map(|v| parse_int(v, what))
        .collect()
}

fn parse_rat_vec(value: &toml::Value, what: &str) -> Result<Vec<Rat>> {
    as_array(value, what)?
        .iter()
        .map(|v| parse_rat(v, what))
        .collect()
}

const TOP_LEVEL_FIELDS: [&str; 6] = ["root_system", "m_basis", "sigma", "s_p", "colors_a", "fan"];

pub fn parse_document(text: &str) -> Result<Document> {
    let table: toml::Table = text
        .parse()
        .map_err(|e| doc_err(format!("not valid TOML: {e}")))?;

    for key in table.keys() {
        if !TOP_LEVEL_FIELDS.contains(&key.as_str()) {
            return Err(doc_err(format!("unknown field '{key}'")));
        }
    }

    let rs_spec = table
        .get("root_system")
        .and_then(|v| v.as_str())
        .ok_or_else(|| doc_err("missing or non-string field 'root_system'"))?;
    let root_system =
        parse_root_system(rs_spec).map_err(|e| doc_err(format!("root_system: {e}")))?;

    let m_basis_val = table
        .get("m_basis")
        .ok_or_else(|| doc_err("missing field 'm_basis'"))?;
    let mut m_basis: Vec<Character> = Vec::new();
    for (i, row) in as_array(m_basis_val, "m_basis")?.iter().enumerate() {
        let coords = parse_rat_vec(row, &format!("m_basis[{i}]"))?;
        if coords.len() != root_system.char_len() {
            return Err(doc_err(format!(
                "m_basis[{i}] has length {}, expected |S| + central rank = {}",
                coords.len(),
                root_system.char_len()
            )));
        }
        m_basis.push(Character { coords });
    }
    let rank = m_basis.len();

    let sigma = match table.get("sigma") {
        Some(v) => as_array(v, "sigma")?
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let s = parse_int_vec(row, &format!("sigma[{k}]"))?;
                if s.len() != rank {
                    return Err(doc_err(format!(
                        "sigma[{k}] has length {}, expected rank(M) = {rank}",
                        s.len()
                    )));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };

    let s_p = match table.get("s_p") {
        Some(v) => as_array(v, "s_p")?
            .iter()
            .map(|label| {
                let label = label
                    .as_str()
                    .ok_or_else(|| doc_err("s_p entries must be root labels"))?;
                root_system
                    .index_of_label(label)
                    .ok_or_else(|| doc_err(format!("s_p: unknown simple root '{label}'")))
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };

    let colors_a = match table.get("colors_a") {
        Some(v) => as_array(v, "colors_a")?
            .iter()
            .map(|entry| {
                let t = as_table(entry, "colors_a entry")?;
                let name = t
                    .get("name")
                    .and_then(|v| v.as_str())
                    .ok_or_else(|| doc_err("colors_a entry needs a string 'name'"))?
                    .to_string();
                let rho = parse_int_vec(
                    t.get("rho")
                        .ok_or_else(|| doc_err(format!("color {name} needs 'rho'")))?,
                    &format!("rho of {name}"),
                )?;
                if rho.len() != rank {
                    return Err(doc_err(format!(
                        "rho of {name} has length {}, expected rank(M) = {rank}",
                        rho.len()
                    )));
                }
                for key in t.keys() {
                    if key != "name" && key != "rho" {
                        return Err(doc_err(format!("colors_a entry: unknown field '{key}'")));
                    }
                }
                Ok((name, rho))
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };

    let maximal = match table.get("fan") {
        Some(v) => as_array(v, "fan")?
            .iter()
            .enumerate()
            .map(|(i, entry)| {
                let t = as_table(entry, &format!("fan[{i}]"))?;
                let generators = as_array(
                    t.get("generators")
                        .ok_or_else(|| doc_err(format!("fan[{i}] needs 'generators'")))?,
                    &format!("fan[{i}].generators"),
                )?
                .iter()
                .map(|g| {
                    let g = parse_int_vec(g, &format!("fan[{i}] generator"))?;
                    if g.len() != rank {
                        return Err(doc_err(format!(
                            "fan[{i}] generator has length {}, expected rank(M) = {rank}",
                            g.len()
                        )));
                    }
                    Ok(g)
                })
                .collect::<Result<Vec<_>>>()?;
                let colors = match t.get("colors") {
                    Some(c) => as_array(c, &format!("fan[{i}].colors"))?
                        .iter()
                        .map(|v| {
                            v.as_str()
                                .map(str::to_string)
                                .ok_or_else(|| doc_err("fan colors must be strings"))
                        })
                        .collect::<Result<Vec<_>>>()?,
                    None => Vec::new(),
                };
                for key in t.keys() {
                    if key != "generators" && key != "colors" {
                        return Err(doc_err(format!("fan[{i}]: unknown field '{key}'")));
                    }
                }
                Ok(ConeSpec { generators, colors })
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };

    Ok(Document {
        datum: HomogeneousSphericalDatum {
            root_system,
            m_basis,
            sigma,
            s_p,
            colors_a,
        },
        maximal,
    })
}

pub fn load_document(path: &std::path::Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| doc_err(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}

fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("\"{}/{}\"", x.numer(), x.denom())
    }
}

fn fmt_rat_row(row: &[Rat]) -> String {
    let items: Vec<String> = row.iter().map(fmt_rat).collect();
    format!("[{}]", items.join(", "))
}

fn fmt_int_row(row: &[Int]) -> String {
    let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn toml_string(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Canonical emission of a document: fixed field order, rationals as
/// `p/q` strings, colors sorted by name, fan entries sorted canonically.
/// `parse(emit(parse(text)))` reproduces `emit(parse(text))` exactly.
pub fn emit_document(doc: &Document) -> String {
    let datum = &doc.datum;
    let mut out = String::new();
    out.push_str(&format!(
        "root_system = {}\n",
        toml_string(&datum.root_system.spec_string())
    ));
    out.push_str("m_basis = [\n");
    for b in &datum.m_basis {
        out.push_str(&format!("  {},\n", fmt_rat_row(&b.coords)));
    }
    out.push_str("]\n");
    out.push_str("sigma = [");
    out.push_str(
        &datum
            .sigma
            .iter()
            .map(|s| fmt_int_row(s))
            .collect::<Vec<_>>()
            .join(", "),
    );
    out.push_str("]\n");
    let mut sp: Vec<&str> = datum
        .s_p
        .iter()
        .map(|&i| datum.root_system.label(i))
        .collect();
    sp.sort_unstable();
    out.push_str(&format!(
        "s_p = [{}]\n",
        sp.iter()
            .map(|l| toml_string(l))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let mut colors = datum.colors_a.clone();
    colors.sort_by(|a, b| a.0.cmp(&b.0));
    for (name, rho) in &colors {
        out.push_str(&format!(
            "\n[[colors_a]]\nname = {}\nrho = {}\n",
            toml_string(name),
            fmt_int_row(rho)
        ));
    }
    let mut maximal = doc.maximal.clone();
    maximal.sort_by(|a, b| (&a.generators, &a.colors).cmp(&(&b.generators, &b.colors)));
    for spec in &maximal {
        out.push_str("\n[[fan]]\ngenerators = [");
        out.push_str(
            &spec
                .generators
                .iter()
                .map(|g| fmt_int_row(g))
                .collect::<Vec<_>>()
                .join(", "),
        );
        out.push_str("]\n");
        let mut names = spec.colors.clone();
        names.sort();
        out.push_str(&format!(
            "colors = [{}]\n",
            names
                .iter()
                .map(|n| toml_string(n))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    out
}

/// Canonicalize the listed maximal cones and complete the fan.
pub fn fan_of_document(doc: &Document) -> Result<(Vec<ColoredCone>, ColoredFan)> {
    let rank = doc.datum.rank();
    let maximal: Vec<ColoredCone> = doc
        .maximal
        .iter()
        .map(|spec| {
            Ok(ColoredCone::new(
                crate::cone::Cone::from_generators(&spec.generators, rank)?,
                spec.colors.clone(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let fan = complete_fan(&doc.datum, &maximal)?;
    Ok((maximal, fan))
}

/// A document holding the same datum with the canonical form of the
/// listed maximal cones; this is what machine output prints.
pub fn canonical_document(doc: &Document) -> Result<Document> {
    let (maximal, _) = fan_of_document(doc)?;
    Ok(Document {
        datum: doc.datum.clone(),
        maximal: maximal
            .iter()
            .map(|cc| ConeSpec {
                generators: cc.cone.generators(),
                colors: cc.colors.clone(),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    const SMALL: &str = r#"
root_system = "A1xA1xA1xA1"
m_basis = [
  [1, 0, 0, 0],
  [0, "1/2", "1/2", 0],
  [0, 0, 0, "1/2"],
]
sigma = [[1, 0, 0], [0, 1, 0]]
s_p = []

[[colors_a]]
name = "D'"
rho = [1, 0, 0]

[[colors_a]]
name = "D''"
rho = [1, 0, 0]

[[fan]]
generators = [[0, 0, 1]]
colors = ["D_b(delta)"]
"#;

    #[test]
    fn parse_small_document() {
        let doc = parse_document(SMALL).unwrap();
        assert_eq!(doc.datum.rank(), 3);
        assert_eq!(doc.datum.colors_a.len(), 2);
        assert_eq!(doc.maximal.len(), 1);
        assert_eq!(doc.maximal[0].generators, vec![int_vec(&[0, 0, 1])]);
        let report = crate::datum::validate_datum(&doc.datum);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn emit_then_parse_is_stable() {
        let doc = parse_document(SMALL).unwrap();
        let emitted = emit_document(&canonical_document(&doc).unwrap());
        let reparsed = parse_document(&emitted).unwrap();
        assert_eq!(reparsed.datum, doc.datum);
        let emitted2 = emit_document(&canonical_document(&reparsed).unwrap());
        assert_eq!(emitted, emitted2);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = format!("{SMALL}\nextra = 1\n");
        assert!(matches!(parse_document(&text), Err(Error::Document(_))));
    }

    #[test]
    fn bad_rational_is_rejected() {
        let text = SMALL.replace("\"1/2\"", "\"1/x\"");
        assert!(matches!(parse_document(&text), Err(Error::Document(_))));
    }

    #[test]
    fn ragged_sigma_is_rejected() {
        let text = SMALL.replace("[[1, 0, 0], [0, 1, 0]]", "[[1, 0], [0, 1, 0]]");
        assert!(matches!(parse_document(&text), Err(Error::Document(_))));
    }

    #[test]
    fn unknown_root_label_in_sp_is_rejected() {
        let text = SMALL.replace("s_p = []", "s_p = [\"omega\"]");
        assert!(matches!(parse_document(&text), Err(Error::Document(_))));
    }
}
