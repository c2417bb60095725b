#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use ptalg::algebra::Poly;
use ptalg::irreps::IrrepOfAlgebra;
use ptalg::symgroup::{Partition, Permutation};

pub type CMatrix = DMatrix<Complex64>;

pub fn perm(s: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(s, n).unwrap()
}

pub fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn max_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    (a - b).abs().max()
}

pub fn cmax_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn complex(m: &DMatrix<f64>) -> CMatrix {
    m.map(|x| Complex64::new(x, 0.0))
}

/// `P M P^T`.
pub fn conjugate(m: &DMatrix<f64>, p: &DMatrix<f64>) -> DMatrix<f64> {
    p * m * p.transpose()
}

pub fn swap2() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[0., 1., 1., 0.])
}

pub fn flip2() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[1., 0., 0., -1.])
}

/// The multiplication table of the three-factor algebra as printed, rows
/// times columns, in the order `1, (132), (123), (12), (13), (23)`.
pub const TABLE_3: [[&str; 6]; 6] = [
    ["1", "(132)^t", "(123)^t", "(12)^t", "(13)^t", "(23)^t"],
    ["(132)^t", "(132)^t", "d(23)^t", "(23)^t", "d(132)^t", "(23)^t"],
    ["(123)^t", "d(13)^t", "(123)^t", "(13)^t", "(13)^t", "d(123)^t"],
    ["(12)^t", "(13)^t", "(23)^t", "1", "(132)^t", "(123)^t"],
    ["(13)^t", "(13)^t", "d(123)^t", "(123)^t", "d(13)^t", "(123)^t"],
    ["(32)^t", "d(132)^t", "(23)^t", "(132)^t", "(132)^t", "d(23)^t"],
];

pub const TABLE_3_ORDER: [&str; 6] = ["id", "(132)", "(123)", "(12)", "(13)", "(23)"];

/// `"d(23)^t"` → `(d, (23))`; `"1"` → `(1, id)`.
pub fn parse_cell(s: &str, n: usize) -> (Poly, Permutation) {
    if s == "1" {
        return (Poly::constant(1), Permutation::identity(n));
    }
    let body = s.strip_suffix("^t").expect("cell ends in ^t");
    let open = body.find('(').expect("cell has a cycle");
    let coefficient = match &body[..open] {
        "" => Poly::constant(1),
        c => c.parse().unwrap(),
    };
    (coefficient, perm(&body[open..], n))
}

fn sqrt_d2(d: f64) -> f64 {
    (d * d - 1.0).sqrt()
}

/// Three-factor kind-`M` irrep in the reduced basis, as printed.
pub fn three_reduced(sigma: &str, d: f64) -> DMatrix<f64> {
    let s = sqrt_d2(d);
    let m = |v: [f64; 4]| DMatrix::from_row_slice(2, 2, &v);
    match sigma {
        "(13)" => m([d + 1.0, -s, -s, d - 1.0]) / 2.0,
        "(23)" => m([d + 1.0, s, s, d - 1.0]) / 2.0,
        "(123)" => m([d + 1.0, s, -s, 1.0 - d]) / 2.0,
        "id" => m([1., 0., 0., 1.]),
        "(12)" => m([1., 0., 0., -1.]),
        _ => panic!("not printed: {sigma}"),
    }
}

/// Three-factor kind-`M` irrep in the u-dual basis, as printed.
pub fn three_dual(sigma: &str, d: f64) -> DMatrix<f64> {
    let m = |v: [f64; 4]| DMatrix::from_row_slice(2, 2, &v);
    match sigma {
        "(12)" => m([0., 1., 1., 0.]),
        "(132)" => m([1., d, 0., 0.]),
        "(123)" => m([0., 0., d, 1.]),
        "id" => m([1., 0., 0., 1.]),
        "(13)" => m([0., 0., 1., d]),
        "(23)" => m([d, 1., 0., 0.]),
        _ => panic!("not printed: {sigma}"),
    }
}

/// Semi-trivial irreps of the three-factor algebra; the sign irrep sends the
/// identity to `1`.
pub fn three_semi(nu: &str, sigma: &str) -> f64 {
    match (nu, sigma) {
        (_, "id") => 1.0,
        ("2", "(12)") => 1.0,
        ("1,1", "(12)") => -1.0,
        _ => 0.0,
    }
}

/// Four-factor kind-`M` irreps in the u-dual basis, as printed.
pub fn four_dual(alpha: &str, sigma: &Permutation, d: f64) -> DMatrix<f64> {
    let sgn = alpha == "1,1";
    let s = if sgn { -1.0 } else { 1.0 };
    let row = |r: usize, v: [f64; 3]| {
        let mut m = DMatrix::zeros(3, 3);
        for (j, x) in v.iter().enumerate() {
            m[(r, j)] = *x;
        }
        m
    };
    if !sigma.fixes_last() {
        return match sigma.cycle_string().as_str() {
            "(14)" => row(0, [d, s, 1.0]),
            "(24)" => row(1, [s, d, 1.0]),
            "(34)" => row(2, [1.0, 1.0, d]),
            other => panic!("not printed: {other}"),
        };
    }
    let r = sigma.restrict().unwrap();
    DMatrix::from_fn(3, 3, |i, j| {
        let (i, j) = (i + 1, j + 1);
        if i != r.apply(j) {
            return 0.0;
        }
        if !sgn {
            return 1.0;
        }
        let p = &(&Permutation::transposition(3, i, 3) * &r) * &Permutation::transposition(3, j, 3);
        f64::from(p.sign())
    })
}

/// `√λ` in the printed column order: the two-dimensional block first.
pub fn four_scaling(alpha: &str, d: f64) -> DMatrix<f64> {
    let v = if alpha == "2" { [d - 1.0, d - 1.0, d + 2.0] } else { [d + 1.0, d + 1.0, d - 2.0] };
    DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(3, v.iter().map(|x| x.sqrt())))
}

pub fn eps() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn cmat(rows: usize, v: Vec<Complex64>) -> CMatrix {
    CMatrix::from_row_slice(rows, v.len() / rows, &v)
}

/// The two-dimensional irrep of `S(3)` in the printed complex basis.
pub fn psi2(sigma: &Permutation) -> CMatrix {
    let e = eps();
    let (o, z) = (c(1.0), c(0.0));
    let ei = e.inv();
    match sigma.cycle_string().as_str() {
        "id" => cmat(2, vec![o, z, z, o]),
        "(12)" => cmat(2, vec![z, o, o, z]),
        "(13)" => cmat(2, vec![z, e, ei, z]),
        "(23)" => cmat(2, vec![z, ei, e, z]),
        "(123)" => cmat(2, vec![e, z, z, ei]),
        "(132)" => cmat(2, vec![ei, z, z, e]),
        other => panic!("{other}"),
    }
}

/// The printed reducing matrix of the four-factor induced representations.
pub fn four_z(alpha: &str) -> CMatrix {
    let e = eps();
    let o = c(1.0);
    let v = if alpha == "2" {
        vec![e, e * e, o, e * e, e, o, o, o, o]
    } else {
        vec![-e, -e.inv(), -o, -e.inv(), -e, -o, o, o, o]
    };
    cmat(3, v) / c(3f64.sqrt())
}

/// Four-factor kind-`M` irreps in the printed complex reduced basis. At
/// `d = 2` the sign irrep keeps only its first two rows and columns.
pub fn four_reduced(alpha: &str, sigma: &Permutation, d: f64) -> CMatrix {
    let e = eps();
    let (o, e2) = (c(1.0), e * e);
    let sgn = alpha == "1,1";
    let dm = complex(&four_scaling(alpha, d));
    let full = if !sigma.fixes_last() {
        let core = match (sigma.cycle_string().as_str(), sgn) {
            ("(14)", false) | ("(24)", true) => vec![o, e, e2, e2, o, e, e, e2, o],
            ("(24)", false) | ("(14)", true) => vec![o, e2, e, e, o, e2, e2, e, o],
            ("(34)", _) => vec![o; 9],
            (other, _) => panic!("not printed: {other}"),
        };
        &dm * cmat(3, core) * &dm / c(3.0)
    } else {
        let r = sigma.restrict().unwrap();
        let mut m = CMatrix::zeros(3, 3);
        m.view_mut((0, 0), (2, 2)).copy_from(&psi2(&r));
        m[(2, 2)] = if sgn { c(f64::from(r.sign())) } else { o };
        m
    };
    if sgn && d == 2.0 {
        full.view((0, 0), (2, 2)).into_owned()
    } else {
        full
    }
}

/// The printed reducing matrix with the second column of the sign case
/// negated. With this crate's coset action `conj(Z)` is the reducing unitary.
pub fn four_z_fixed(alpha: &str) -> CMatrix {
    let mut z = four_z(alpha);
    if alpha == "1,1" {
        for i in 0..3 {
            z[(i, 1)] = -z[(i, 1)];
        }
    }
    z
}

/// The printed images made consistent with the printed two-dimensional
/// block: the trivial case swaps the `(14)` and `(24)` cores, the sign case
/// conjugates the cores by `diag(1,-1,1)`.
pub fn four_reduced_fixed(alpha: &str, sigma: &Permutation, d: f64) -> CMatrix {
    if sigma.fixes_last() {
        return four_reduced(alpha, sigma, d);
    }
    if alpha == "2" {
        let other = match sigma.cycle_string().as_str() {
            "(14)" => Permutation::parse_cycles("(24)", 4).unwrap(),
            "(24)" => Permutation::parse_cycles("(14)", 4).unwrap(),
            _ => sigma.clone(),
        };
        return four_reduced(alpha, &other, d);
    }
    let m = four_reduced(alpha, sigma, d);
    let k = m.nrows();
    CMatrix::from_fn(k, k, |i, j| {
        let s = if (i == 1) != (j == 1) { -1.0 } else { 1.0 };
        m[(i, j)] * s
    })
}

/// `U^† M U`.
pub fn adapt(m: &DMatrix<f64>, u: &CMatrix) -> CMatrix {
    u.adjoint() * complex(m) * u
}

/// The unitary `Z_mine^T conj(Z_printed)`, restricted to `keep` columns,
/// mapping this crate's reduced basis to the printed one.
pub fn adapter(z_mine: &DMatrix<f64>, z_printed: &CMatrix, keep: &[usize]) -> CMatrix {
    let full = complex(&z_mine.transpose()) * z_printed.conjugate();
    CMatrix::from_fn(keep.len(), keep.len(), |i, j| full[(keep[i], keep[j])])
}

pub fn all_generators(irrep: &IrrepOfAlgebra) -> Vec<Permutation> {
    irrep.images.keys().cloned().collect()
}
