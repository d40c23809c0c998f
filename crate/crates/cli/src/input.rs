//! Parsing of module shapes, action matrices, field names and descriptor files.

use kummer_core::arith::prime_power;
use kummer_core::error::{Error, Result};
use kummer_core::linalg::Mat;
use kummer_core::valuation_engine::{KummerCase, Residue, ValuedFieldDescriptor};
use std::collections::BTreeMap;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInstance(msg.into())
}

fn int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("{what}: cannot parse {s:?}")))
}

/// "9,3" → (p, [2, 1]): the group Z/9 ⊕ Z/3.
pub fn module_shape(spec: &str) -> Result<(u64, Vec<u32>)> {
    let mut p = None;
    let mut parts = Vec::new();
    for tok in spec.split(',') {
        let order: u64 = int(tok, "module")?;
        let (ell, k) = prime_power(order)
            .ok_or_else(|| bad(format!("module order {order} is not a prime power")))?;
        if *p.get_or_insert(ell) != ell {
            return Err(bad("cyclic parts must share one prime"));
        }
        parts.push(k);
    }
    Ok((p.ok_or_else(|| bad("empty module"))?, parts))
}

/// Rows separated by ';', entries by ',', reduced mod `modulus`. "2,0;0,-1" is diag(2, −1).
pub fn matrix(spec: &str, size: usize, modulus: u64) -> Result<Mat> {
    let rows: Vec<Vec<u64>> = spec
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| int::<i64>(x, "action").map(|v| v.rem_euclid(modulus as i64) as u64))
                .collect()
        })
        .collect::<Result<_>>()?;
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(bad(format!("action must be a {size}x{size} matrix")));
    }
    Ok(Mat::from_rows(&rows))
}

pub fn int_list(spec: &str, what: &str) -> Result<Vec<i64>> {
    spec.split(',').map(|x| int(x, what)).collect()
}

/// "F_4", "F_2^2" or "F_7".
pub fn finite_field_name(name: &str) -> Option<(u64, u32)> {
    let rest = name.trim().strip_prefix("F_")?;
    match rest.split_once('^') {
        Some((ell, d)) => Some((ell.parse().ok()?, d.parse().ok()?)),
        None => prime_power(rest.parse().ok()?),
    }
}

/// A descriptor file plus the optional symbol and tower lines.
#[derive(Debug)]
pub struct DescriptorFile {
    pub p: u64,
    pub descriptor: ValuedFieldDescriptor,
    /// Exponent vector and residue-element index of each symbol slot.
    pub symbol: Option<[(Vec<i64>, u128); 2]>,
    pub tower: Vec<KummerCase>,
}

fn slot(spec: &str, rank: usize) -> Result<(Vec<i64>, u128)> {
    let (exps, coeff) = match spec.split_once(':') {
        Some((e, c)) => (e, int(c, "coefficient index")?),
        None => (spec, 1),
    };
    let exps = int_list(exps, "exponent")?;
    if exps.len() != rank {
        return Err(Error::InvalidDescriptor(format!(
            "slot {spec:?} needs {rank} exponents"
        )));
    }
    Ok((exps, coeff))
}

fn flag(s: &str) -> Result<bool> {
    match s.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        other => Err(Error::InvalidDescriptor(format!("not a flag: {other:?}"))),
    }
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn descriptor(text: &str) -> Result<DescriptorFile> {
    let mut kv = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::InvalidDescriptor(format!("line {}: expected key = value", no + 1))
        })?;
        if kv
            .insert(k.trim().to_string(), v.trim().to_string())
            .is_some()
        {
            return Err(Error::InvalidDescriptor(format!(
                "duplicate key {:?}",
                k.trim()
            )));
        }
    }
    let known = [
        "residue",
        "characteristic",
        "mu_p_degree",
        "p",
        "rank",
        "mu_p_chain",
        "l_over_f",
        "a",
        "b",
        "tower",
    ];
    if let Some(k) = kv.keys().find(|k| !known.contains(&k.as_str())) {
        return Err(Error::InvalidDescriptor(format!("unknown key {k:?}")));
    }
    let get = |k: &str| {
        kv.get(k)
            .ok_or_else(|| Error::InvalidDescriptor(format!("missing key {k:?}")))
    };
    let p: u64 = int(get("p")?, "p")?;
    let rank: usize = int(get("rank")?, "rank")?;
    let label = get("residue")?;
    let residue = match finite_field_name(label) {
        Some((ell, d)) => Residue::finite(ell, d)?,
        None => Residue::Symbolic {
            label: label.clone(),
            characteristic: int(get("characteristic")?, "characteristic")?,
            mu_p_degree: int(get("mu_p_degree")?, "mu_p_degree")?,
        },
    };
    let mut descriptor = ValuedFieldDescriptor::laurent(residue, rank);
    if let Some(chain) = kv.get("mu_p_chain") {
        descriptor.residue_chain = Some(chain.split(',').map(flag).collect::<Result<_>>()?);
    }
    if let Some(d) = kv.get("l_over_f") {
        descriptor.l_over_f = Some(int(d, "l_over_f")?);
    }
    let symbol = match (kv.get("a"), kv.get("b")) {
        (Some(a), Some(b)) => Some([slot(a, rank)?, slot(b, rank)?]),
        (None, None) => None,
        _ => {
            return Err(Error::InvalidDescriptor(
                "a symbol needs both a and b".into(),
            ))
        }
    };
    let tower = match kv.get("tower") {
        Some(t) => t
            .split(',')
            .map(|c| match c.trim() {
                "I" => Ok(KummerCase::I),
                "II" => Ok(KummerCase::II),
                "III" => Ok(KummerCase::III),
                other => Err(Error::InvalidDescriptor(format!("unknown case {other:?}"))),
            })
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    Ok(DescriptorFile {
        p,
        descriptor,
        symbol,
        tower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_matrices() {
        assert_eq!(module_shape("9,3").unwrap(), (3, vec![2, 1]));
        assert!(module_shape("9,5").is_err());
        assert!(module_shape("6").is_err());
        let m = matrix("2,0;0,-1", 2, 5).unwrap();
        assert_eq!(m, Mat::from_rows(&[vec![2, 0], vec![0, 4]]));
        assert!(matrix("1,2", 2, 5).is_err());
    }

    #[test]
    fn field_names() {
        assert_eq!(finite_field_name("F_4"), Some((2, 2)));
        assert_eq!(finite_field_name("F_2^2"), Some((2, 2)));
        assert_eq!(finite_field_name("Q(mu_3)"), None);
    }

    #[test]
    fn descriptor_file() {
        let d = descriptor("residue = F_4\np = 3\nrank = 2 # x, y\na = 1,0\nb = 0,1:2\n").unwrap();
        assert_eq!(d.p, 3);
        assert_eq!(d.symbol.unwrap()[1], (vec![0, 1], 2));
        let v2 = descriptor(
            "residue = Q(mu_3)\ncharacteristic = 0\nmu_p_degree = 1\np = 3\nrank = 2\nmu_p_chain = true,false\nl_over_f = 2\n",
        )
        .unwrap();
        assert_eq!(v2.descriptor.residue_chain, Some(vec![true, false]));
        assert!(descriptor("p = 3\nrank = 1\nresidue = F_4\nfoo = 1\n").is_err());
        assert!(descriptor("p = 3\nrank = 1\n").is_err());
    }
}
