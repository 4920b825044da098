use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use proptest::prelude::*;

use cp2nine::catalog::{s_perm, t_perm};
use cp2nine::geometry::{sigma_inverse, tau_map, ProjectivePoint};
use cp2nine::plmap::*;
use cp2nine::{lbl, Simplex};

fn model() -> &'static PlModel {
    static M: OnceLock<PlModel> = OnceLock::new();
    M.get_or_init(|| PlModel::new().unwrap())
}

fn point() -> impl Strategy<Value = PLPoint> {
    let n = model().subdivided.facets().len();
    (0..n, prop::collection::vec(0.0f64..1.0, 5)).prop_map(|(i, w)| {
        let total: f64 = w.iter().sum::<f64>().max(1e-9);
        let w: Vec<f64> = w.iter().map(|x| x / total).collect();
        let f = model().subdivided.facets()[i].clone();
        PLPoint::new(f, w).unwrap()
    })
}

fn moduli(q: &ProjectivePoint) -> [f64; 3] {
    q.0.map(|z| z.norm())
}

#[test]
fn named_vertex_images() {
    let m = model();
    let w = |k: f64| Complex64::from_polar(1.0, k * PI / 7.0);
    let one = Complex64::new(1.0, 0.0);
    let table = [
        ("1", ProjectivePoint::real(1.0, 0.0, 0.0)),
        ("4", ProjectivePoint::real(0.0, 1.0, 0.0)),
        ("7", ProjectivePoint::real(0.0, 0.0, 1.0)),
        ("[14]", ProjectivePoint::real(1.0, 1.0, 0.0)),
        ("[147]", ProjectivePoint::real(1.0, 1.0, 1.0)),
        ("2", ProjectivePoint([one, w(4.0), w(12.0)])),
        ("3", ProjectivePoint([one, w(-4.0), w(-12.0)])),
    ];
    for (v, want) in table {
        let got = m.eval_h(&PLPoint::vertex(lbl(v))).unwrap();
        assert!(got.distance(&want) < 1e-12, "{v}: {got}");
    }
}

#[test]
fn report_passes_and_is_deterministic() {
    let a = check_map_properties(2000, 1e-9, 7).unwrap();
    assert!(a.all_pass(false), "{}", a.to_text());
    let b = check_map_properties(2000, 1e-9, 7).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn mesh_is_finite() {
    let tris = export_mesh(model(), MeshPart::All, 1).unwrap();
    assert!(!tris.is_empty());
    assert!(tris.iter().flatten().all(|x| x.is_finite()));
    let text = format_mesh(&tris[..3]);
    assert_eq!(text.lines().count(), 3);
    assert_eq!(text.lines().next().unwrap().split(' ').count(), 9);
}

#[test]
fn foliation_rows_pass() {
    let rows = verify_foliation(model(), 64).unwrap();
    assert_eq!(rows.len(), 6);
    for r in rows {
        assert!(r.passed(), "{r:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjugates_s_and_t(p in point()) {
        let m = model();
        let h = m.eval_h(&p).unwrap();
        let hs = m.eval_h(&p.relabel(&s_perm()).unwrap()).unwrap();
        let ht = m.eval_h(&p.relabel(&t_perm()).unwrap()).unwrap();
        prop_assert!(hs.distance(&sigma_inverse(&h)) < 1e-9);
        prop_assert!(ht.distance(&tau_map(&h)) < 1e-9);
    }

    #[test]
    fn pieces_land_in_their_regions(p in point()) {
        // oracle: the coordinate of largest modulus
        let m = model();
        let z = moduli(&m.eval_h(&p).unwrap());
        let top = z.iter().cloned().fold(0.0, f64::max);
        for (k, j) in ["1", "4", "7"].into_iter().enumerate() {
            if p.simplex.contains(&lbl(j)) {
                prop_assert!(z[k] >= top - 1e-9, "{} in B{}: {:?}", p, j, z);
            }
        }
    }

    #[test]
    fn agrees_across_shared_faces(p in point(), drop in 0usize..5) {
        // put the point on a ridge, then evaluate it from every facet containing that ridge
        let m = model();
        let mut w = p.barycentric.clone();
        w[drop] = 0.0;
        let total: f64 = w.iter().sum();
        prop_assume!(total > 1e-6);
        let w: Vec<f64> = w.iter().map(|x| x / total).collect();
        let q = PLPoint::new(p.simplex.clone(), w).unwrap();
        let ridge = q.support().unwrap();
        let reference = m.eval_h(&q).unwrap();
        let others: Vec<&Simplex> = m.subdivided.facets().iter().filter(|f| ridge.is_subset_of(f)).collect();
        prop_assert!(others.len() >= 2);
        for f in others {
            let img = m.eval_h(&q.on(f).unwrap()).unwrap();
            prop_assert!(img.distance(&reference) < 1e-9);
        }
    }

    #[test]
    fn leaves_are_located(t in 0.0f64..1.0, r in 0.0f64..1.0, phi in -PI..PI) {
        let (theta, z) = section_point(t, r, phi);
        prop_assume!(r > 1e-6);
        prop_assert!((locate_leaf(theta, z) - t).abs() < 1e-9);
    }
}
