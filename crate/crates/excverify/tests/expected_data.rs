//! The bundled expected values are cross-checked against dimension arithmetic on
//! the named compact algebras, computed here independently of the data file.

use std::collections::HashMap;

use excverify::harness::{expected_data, Provenance};

/// (dim, center dim) of a compact summand such as "su(4)", "sp(1)", "iR", "e6".
fn summand(s: &str) -> (usize, usize) {
    let s = s.trim();
    let arg = |p: &str| s.strip_prefix(p).and_then(|r| r.strip_suffix(')')).map(|n| n.parse::<usize>().unwrap());
    if s == "iR" {
        (1, 1)
    } else if let Some(n) = arg("so(") {
        (n * (n - 1) / 2, usize::from(n == 2))
    } else if let Some(n) = arg("su(") {
        (n * n - 1, 0)
    } else if let Some(n) = arg("u(") {
        (n * n, 1)
    } else if let Some(n) = arg("sp(") {
        (n * (2 * n + 1), 0)
    } else {
        match s {
            "g2" => (14, 0),
            "f4" => (52, 0),
            "e6" => (78, 0),
            "e7" => (133, 0),
            "e8" => (248, 0),
            _ => panic!("unknown summand {s}"),
        }
    }
}

fn algebra(k: &str) -> (usize, usize) {
    k.split('+').map(summand).fold((0, 0), |(d, c), (d2, c2)| (d + d2, c + c2))
}

#[test]
fn table2_dims_follow_from_named_algebras() {
    for row in &expected_data().table2 {
        assert_eq!(algebra(&row.k).0, row.dim, "{}", row.row);
    }
}

#[test]
fn table1_dims_centers_and_derived_follow_from_named_algebras() {
    let rows = &expected_data().table1;
    assert_eq!(rows.len(), 24);
    for row in rows {
        let (dim, center) = algebra(&row.k);
        assert_eq!(dim, row.dim, "{}", row.row);
        assert_eq!(center, row.center, "{}", row.row);
        assert_eq!(dim - center, row.derived, "{}", row.row);
    }
}

#[test]
fn type_triples_use_single_involution_dims() {
    let by_type: HashMap<&str, usize> = expected_data().table2.iter().map(|r| (r.row.as_str(), r.dim)).collect();
    for row in &expected_data().table1 {
        let dims: Vec<usize> = row.types.iter().map(|t| by_type[t.as_str()]).collect();
        assert_eq!(dims, row.type_dims, "{}", row.row);
    }
}

#[test]
fn basis_dims_and_provenance() {
    let d = expected_data();
    let dims: Vec<_> = d.bases.iter().map(|b| (b.algebra.as_str(), b.dim)).collect();
    assert_eq!(dims, [("g2", 14), ("f4", 52), ("e6", 78), ("e7", 133), ("e8", 248)]);
    for b in &d.bases {
        assert_eq!(summand(&b.algebra).0, b.dim);
        assert_eq!(b.provenance, Provenance::Derived);
    }
    assert!(d.table1.iter().all(|r| r.provenance == Provenance::Reference && !r.note.is_empty()));
    let lemma_dims: Vec<_> = d.lemmas.iter().map(|l| l.dim).collect();
    assert_eq!(lemma_dims, [28, 29, 120, 120, 136, 136, 136, 136]);
    assert_eq!(d.schema_version, 1);
}
