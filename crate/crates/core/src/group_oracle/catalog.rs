//! Built-in group lists for the exhaustive sweeps.

use super::group::*;

fn named(mut g: FiniteGroup, name: &str) -> FiniteGroup {
    g.name = name.to_string();
    g
}

fn c(n: usize) -> FiniteGroup {
    cyclic(n)
}

fn x(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    direct_product(a, b)
}

/// Groups of order at most 24: every cyclic group, the dihedral groups, and
/// a selection of abelian and nonabelian groups covering each order.
pub fn catalog_upto_24() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=24).map(cyclic).collect();
    out.push(symmetric(3));
    for n in 4..=12 {
        out.push(dihedral(n));
    }
    let v4 = x(&c(2), &c(2));
    out.push(named(v4.clone(), "C2^2"));
    out.push(x(&c(2), &c(4)));
    out.push(named(x(&v4, &c(2)), "C2^3"));
    out.push(x(&c(3), &c(3)));
    out.push(x(&c(2), &c(6)));
    out.push(x(&c(2), &c(8)));
    out.push(x(&c(4), &c(4)));
    out.push(named(x(&v4, &c(4)), "C2^2xC4"));
    out.push(named(x(&v4, &v4), "C2^4"));
    out.push(x(&c(3), &c(6)));
    out.push(x(&c(2), &c(10)));
    out.push(x(&c(2), &c(12)));
    out.push(named(x(&v4, &c(6)), "C2^2xC6"));
    out.push(quaternion());
    out.push(x(&quaternion(), &c(2)));
    out.push(x(&dihedral(4), &c(2)));
    out.push(x(&quaternion(), &c(3)));
    out.push(semidirect_cyclic(3, 4, 2, "Dic12"));
    out.push(semidirect_cyclic(5, 4, 4, "Dic20"));
    out.push(semidirect_cyclic(5, 4, 2, "F20"));
    out.push(semidirect_cyclic(7, 3, 2, "C7:C3"));
    out.push(semidirect_cyclic(3, 8, 2, "C3:C8"));
    out.push(semidirect_cyclic(4, 4, 3, "C4:C4"));
    out.push(semidirect_cyclic(8, 2, 5, "M16"));
    out.push(semidirect_cyclic(8, 2, 3, "SD16"));
    out.push(x(&symmetric(3), &c(3)));
    out.push(generalized_dihedral(&x(&c(3), &c(3)), "(C3xC3):C2"));
    out.push(x(&symmetric(3), &c(4)));
    out.push(x(&dihedral(4), &c(3)));
    out.push(named(x(&symmetric(3), &v4), "S3xC2^2"));
    out.push(x(&semidirect_cyclic(3, 4, 2, "Dic12"), &c(2)));
    out.push(symmetric(4));
    out.push(alternating4());
    out.push(x(&alternating4(), &c(2)));
    out.push(sl23());
    out
}

/// Groups of order s·p^k ≤ 72 with p ∈ {3, 5, 7} and s | p − 1. Complete up
/// to isomorphism for every such order except 54, where a selection is used.
pub fn sylow_catalog() -> Vec<FiniteGroup> {
    let c33 = x(&c(3), &c(3));
    let c55 = x(&c(5), &c(5));
    let heis = heisenberg(3);
    let c9c3 = semidirect_cyclic(9, 3, 4, "C9:C3");
    // (a,b,c) ↦ (-a,-b,c) is an involutive automorphism of the Heisenberg group.
    let heis_flip: Vec<usize> = (0..27)
        .map(|v| {
            let (a, b, cc) = (v / 9, v / 3 % 3, v % 3);
            ((3 - a) % 3 * 3 + (3 - b) % 3) * 3 + cc
        })
        .collect();
    vec![
        // p = 3: orders 3, 9, 27, 6, 18, 54.
        c(3),
        c(9),
        c33.clone(),
        c(27),
        x(&c(9), &c(3)),
        named(x(&c33, &c(3)), "C3^3"),
        heis.clone(),
        c9c3.clone(),
        c(6),
        symmetric(3),
        c(18),
        x(&c(3), &c(6)),
        dihedral(9),
        x(&symmetric(3), &c(3)),
        generalized_dihedral(&c33, "(C3xC3):C2"),
        c(54),
        x(&c(3), &c(18)),
        named(x(&c33, &c(6)), "C3^2xC6"),
        x(&heis, &c(2)),
        x(&c9c3, &c(2)),
        dihedral(27),
        x(&symmetric(3), &c(9)),
        x(&symmetric(3), &c33),
        generalized_dihedral(&x(&c(9), &c(3)), "(C9xC3):C2"),
        generalized_dihedral(&x(&c33, &c(3)), "C3^3:C2"),
        semidirect(&heis, 2, &heis_flip, "Heis27:C2"),
        // p = 5: orders 5, 25, 10, 50, 20.
        c(5),
        c(25),
        c55.clone(),
        c(10),
        dihedral(5),
        c(50),
        x(&c(5), &c(10)),
        dihedral(25),
        x(&dihedral(5), &c(5)),
        generalized_dihedral(&c55, "(C5xC5):C2"),
        c(20),
        x(&c(2), &c(10)),
        dihedral(10),
        semidirect_cyclic(5, 4, 4, "Dic20"),
        semidirect_cyclic(5, 4, 2, "F20"),
        // p = 7: orders 7, 49, 14, 21, 42.
        c(7),
        c(49),
        x(&c(7), &c(7)),
        c(14),
        dihedral(7),
        c(21),
        semidirect_cyclic(7, 3, 2, "C7:C3"),
        c(42),
        dihedral(21),
        semidirect_cyclic(7, 6, 3, "F42"),
        x(&semidirect_cyclic(7, 3, 2, "C7:C3"), &c(2)),
        x(&dihedral(7), &c(3)),
        x(&symmetric(3), &c(7)),
    ]
}

/// Look up a built-in group by name (`C12`, `D8`, `S4`, `Q8`, `Heis27`, ...).
pub fn by_name(name: &str) -> Option<FiniteGroup> {
    if let Some(rest) = name.strip_prefix("Heis") {
        let n: usize = rest.parse().ok()?;
        let p = (2..=5).find(|&p| p * p * p == n)?;
        return Some(heisenberg(p));
    }
    if let Some(rest) = name.strip_prefix('C') {
        if let Ok(n) = rest.parse::<usize>() {
            return (1..=128).contains(&n).then(|| cyclic(n));
        }
    }
    if let Some(rest) = name.strip_prefix('D') {
        if let Ok(n) = rest.parse::<usize>() {
            return (n >= 6 && n % 2 == 0 && n <= 128).then(|| dihedral(n / 2));
        }
    }
    catalog_upto_24()
        .into_iter()
        .chain(sylow_catalog())
        .find(|g| g.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid_and_small() {
        let cat = catalog_upto_24();
        assert!(cat.iter().all(|g| g.order <= 24));
        let nonabelian = cat.iter().filter(|g| !g.is_abelian()).count();
        assert!(nonabelian >= 20);
        let mut names: Vec<&str> = cat.iter().map(|g| g.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cat.len(), "catalog names are unique");
    }

    #[test]
    fn sylow_catalog_orders_have_the_right_shape() {
        for g in sylow_catalog() {
            assert!(g.order <= 72, "{}", g.name);
        }
        assert_eq!(by_name("S4").unwrap().order, 24);
        assert_eq!(by_name("Heis27").unwrap().order, 27);
        assert_eq!(by_name("F42").unwrap().order, 42);
    }
}
