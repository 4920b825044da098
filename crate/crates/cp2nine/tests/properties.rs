use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use cp2nine::catalog::build_t2_7;
use cp2nine::geometry::{star_map, ExactFlatPoint, FlatTorusPoint};
use cp2nine::homology::bistellar::random_flips;
use cp2nine::homology::{homology_groups, recognize_sphere_bistellar, smith_normal_form, IntegerMatrix};
use cp2nine::{Label, Permutation, Simplex, SimplicialComplex};

// ---------- oracles ----------

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors d_1, d_2, ... (gcd of all k×k minors), stopping at the first zero.
fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (m.len(), m.first().map_or(0, |x| x.len()));
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g: i128 = 0;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<i128>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g);
    }
    out
}

fn rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, |x| x.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, piv);
        let inv = (1..p).find(|x| x * a[rank][col] % p == 1).unwrap();
        for i in 0..a.len() {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col] * inv % p;
                let pivot = a[rank].clone();
                for (x, y) in a[i].iter_mut().zip(pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

// ---------- strategies ----------

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn label() -> impl Strategy<Value = Label> {
    let leaf = (1u32..=9).prop_map(Label::Original);
    let inner = leaf.prop_recursive(3, 16, 4, |inner| {
        prop::collection::btree_set(inner, 2..=4).prop_map(|s| Label::derived(s).unwrap())
    });
    prop_oneof![(0u32..100_000).prop_map(Label::Original), inner]
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(1u32..=8, 1..=4), 1..8).prop_map(|fs| {
        SimplicialComplex::from_facets(
            fs.into_iter().map(|s| Simplex::new(s.into_iter().map(Label::Original)).unwrap()),
        )
        .unwrap()
    })
}

fn shifted(c: &SimplicialComplex, by: u32) -> SimplicialComplex {
    c.relabel(|l| match l {
        Label::Original(k) => Ok(Label::Original(k + by)),
        d => Ok(d.clone()),
    })
    .unwrap()
}

fn simplex_boundary(d: u32) -> SimplicialComplex {
    let s = Simplex::new((1..=d + 2).map(Label::Original)).unwrap();
    SimplicialComplex::from_facets([s]).unwrap().boundary_complex().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_matches_determinantal_divisors(m in matrix()) {
        let f = smith_normal_form(&IntegerMatrix::from_rows(&m));
        let d = determinantal_divisors(&m);
        prop_assert_eq!(f.len(), d.len());
        let mut prod = BigInt::from(1);
        for (k, x) in f.iter().enumerate() {
            prop_assert!(*x > BigInt::from(0));
            if k > 0 {
                prop_assert!((x % &f[k - 1]) == BigInt::from(0));
            }
            prod *= x;
            prop_assert_eq!(prod.clone(), BigInt::from(d[k]));
        }
    }

    #[test]
    fn snf_rank_mod_p(m in matrix()) {
        let f = smith_normal_form(&IntegerMatrix::from_rows(&m));
        for p in [2i64, 3, 5, 7] {
            let not_div = f.iter().filter(|x| (*x % BigInt::from(p)) != BigInt::from(0)).count();
            prop_assert_eq!(not_div, rank_mod_p(&m, p));
        }
    }

    #[test]
    fn label_round_trip(l in label()) {
        let back: Label = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn closure_is_idempotent(c in complex()) {
        let again = SimplicialComplex::from_facets(c.facets().to_vec()).unwrap();
        prop_assert_eq!(&again, &c);
        for f in c.faces() {
            for g in f.faces() {
                prop_assert!(c.contains(&g));
            }
        }
    }

    #[test]
    fn euler_from_betti(c in complex()) {
        prop_assert_eq!(homology_groups(&c).euler(), c.euler_characteristic());
    }

    #[test]
    fn relabel_preserves_invariants(c in complex(), perm in Just((1u32..=8).collect::<Vec<_>>()).prop_shuffle()) {
        let map: BTreeMap<Label, Label> =
            (1u32..=8).zip(perm).map(|(a, b)| (Label::Original(a), Label::Original(b))).collect();
        let d = c.relabel(|l| Ok(map[l].clone())).unwrap();
        prop_assert_eq!(d.f_vector(), c.f_vector());
        prop_assert_eq!(homology_groups(&d), homology_groups(&c));
        let p = Permutation::from_map(map).unwrap();
        prop_assert_eq!(p.apply_complex(&c).unwrap(), d);
    }

    #[test]
    fn join_commutes_and_multiplies(a in complex(), b in complex()) {
        let b = shifted(&b, 10);
        let ab = a.join(&b).unwrap();
        prop_assert_eq!(&ab, &b.join(&a).unwrap());
        // face polynomials multiply: f(ab) = f(a) * f(b), counting the empty face
        let poly = |c: &SimplicialComplex| {
            let mut v = vec![1i64];
            v.extend(c.f_vector().counts.iter().map(|&x| x as i64));
            v
        };
        let (pa, pb) = (poly(&a), poly(&b));
        let mut prod = vec![0i64; pa.len() + pb.len() - 1];
        for (i, x) in pa.iter().enumerate() {
            for (j, y) in pb.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        prop_assert_eq!(poly(&ab), prod);
        // reduced Euler characteristics multiply up to sign
        let red = |c: &SimplicialComplex| c.euler_characteristic() - 1;
        prop_assert_eq!(red(&ab), -red(&a) * red(&b));
    }

    #[test]
    fn permutation_cycles_round_trip(perm in Just((1u32..=9).collect::<Vec<_>>()).prop_shuffle()) {
        let map: BTreeMap<Label, Label> =
            (1u32..=9).zip(perm).map(|(a, b)| (Label::Original(a), Label::Original(b))).collect();
        let p = Permutation::from_map(map).unwrap();
        let q = Permutation::parse_cycles(&p.to_string(), Some(9)).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn exact_reduction(a in -60i64..60, b in -60i64..60, i in -4i64..4, j in -4i64..4) {
        let p = ExactFlatPoint::sevenths(a, b, -a - b);
        let r = p.reduce();
        prop_assert!(r.in_hexagon());
        prop_assert!((p - r).is_lattice_point());
        prop_assert_eq!((p + ExactFlatPoint::lattice(i, j)).reduce(), r);
        prop_assert_eq!(r.reduce(), r);
    }

    #[test]
    fn star_map_lattice_invariance(a in -5.0f64..5.0, b in -5.0f64..5.0, i in -6i64..6, j in -6i64..6) {
        let p = FlatTorusPoint([a, b, -a - b]);
        let q = p.add(&FlatTorusPoint::lattice(i, j));
        prop_assert!(star_map(&p).distance(&star_map(&q)) < 1e-12);
        let r = p.reduce().unwrap();
        prop_assert!(r.in_hexagon(1e-9));
        prop_assert!(star_map(&p).distance(&star_map(&r)) < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_flips_preserve_homology(n in 0usize..60, seed in any::<u64>(), d in 2u32..=3) {
        let s = simplex_boundary(d);
        let f = random_flips(&s, n, seed).unwrap();
        prop_assert_eq!(homology_groups(&f), homology_groups(&s));
        prop_assert!(f.is_closed_pseudomanifold());
        prop_assert!(recognize_sphere_bistellar(&f, 100_000, seed).unwrap().is_sphere());
    }

    #[test]
    fn random_flips_on_the_torus(n in 0usize..40, seed in any::<u64>()) {
        let t = build_t2_7();
        let f = random_flips(&t, n, seed).unwrap();
        prop_assert_eq!(homology_groups(&f), homology_groups(&t));
        let v: BTreeSet<_> = f.vertices().iter().collect();
        prop_assert!(v.len() >= 7);
    }
}
