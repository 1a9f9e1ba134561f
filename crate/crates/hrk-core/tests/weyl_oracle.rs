//! Independent verification of the Weyl dimension formula.
//!
//! The oracle computes dimensions by Freudenthal's multiplicity recursion
//! over the weight system (plus Weyl orbit counting), sharing only the root
//! data tables with the implementation, never the product formula.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use hrk_core::ratlin::{rat, ratq, Rat, RatMatrix};
use hrk_core::weyl::{
    monotone_filter, weyl_dim_u64, HighestWeight, RootSystem, TypeLetter,
};
use num::{One, Zero};

/// Half square lengths d_i of the simple roots, normalizing long roots to
/// d = 1. Symmetrizes the Cartan matrix: (alpha_i, alpha_j) = d_i a_ij.
fn root_half_lengths(letter: TypeLetter, rank: usize) -> Vec<Rat> {
    let mut d = vec![rat(1); rank];
    match letter {
        TypeLetter::B => d[rank - 1] = ratq(1, 2),
        TypeLetter::C => d[rank - 1] = rat(2),
        TypeLetter::G => d[1] = rat(3),
        TypeLetter::F => {
            d[2] = ratq(1, 2);
            d[3] = ratq(1, 2);
        }
        _ => {}
    }
    d
}

struct WeightGeometry {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    inv_cartan: RatMatrix,
    d: Vec<Rat>,
    pos_roots: Vec<Vec<i64>>, // simple-root coordinates
}

impl WeightGeometry {
    fn new(rs: &RootSystem) -> Self {
        let rank = rs.rank();
        let cartan: Vec<Vec<i64>> = rs.cartan().to_vec();
        let mut a = RatMatrix::zeros(rank, 2 * rank);
        for i in 0..rank {
            for j in 0..rank {
                a.set(i, j, rat(cartan[i][j]));
            }
            a.set(i, rank + i, rat(1));
        }
        let (r, pivots) = hrk_core::ratlin::rref(&a);
        assert_eq!(pivots.len(), rank, "Cartan matrix is invertible");
        let mut inv = RatMatrix::zeros(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                inv.set(i, j, r.get(i, rank + j).clone());
            }
        }
        WeightGeometry {
            rank,
            cartan,
            inv_cartan: inv,
            d: root_half_lengths(rs.letter(), rank),
            pos_roots: rs.positive_roots().to_vec(),
        }
    }

    /// Root-basis coordinates of a weight given in fundamental coordinates:
    /// solve A * x = m, i.e. x = A^{-1} m (A maps root coords to weight
    /// coords by construction).
    fn to_root_coords(&self, fund: &[Rat]) -> Vec<Rat> {
        // weight coords f_i = sum_k a[i][k] x_k, so x = A^{-1} f
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.inv_cartan.get(i, j) * &fund[j])
                    .sum()
            })
            .collect()
    }

    /// Invariant inner product of weights in fundamental coordinates.
    fn inner(&self, a: &[Rat], b: &[Rat]) -> Rat {
        // (mu, nu) = sum_j  m_j d_j x_j(nu)  since (omega_i, alpha_j) = d_j delta_ij
        let xb = self.to_root_coords(b);
        (0..self.rank).map(|j| &a[j] * &self.d[j] * &xb[j]).sum()
    }

    /// Inner product of a weight (fundamental coords) with a root (root coords).
    fn inner_weight_root(&self, m: &[Rat], a: &[i64]) -> Rat {
        (0..self.rank)
            .map(|j| &m[j] * &self.d[j] * rat(a[j]))
            .sum()
    }

    /// Fundamental coordinates of a root given in root coordinates.
    fn root_to_fund(&self, a: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|k| self.cartan[i][k] * a[k]).sum())
            .collect()
    }

    /// Reflect to the dominant chamber.
    fn dominant_rep(&self, m: &[i64]) -> Vec<i64> {
        let mut v = m.to_vec();
        loop {
            let Some(i) = (0..self.rank).find(|&i| v[i] < 0) else {
                return v;
            };
            let c = v[i];
            for j in 0..self.rank {
                v[j] -= c * self.cartan[j][i];
            }
        }
    }

    /// Size of the Weyl orbit of a dominant weight, by reflection closure.
    fn orbit_size(&self, m: &[i64]) -> u64 {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(m.to_vec());
        queue.push_back(m.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v[i] == 0 {
                    continue;
                }
                let mut w = v.clone();
                let c = v[i];
                for j in 0..self.rank {
                    w[j] -= c * self.cartan[j][i];
                }
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() as u64
    }
}

fn to_rat(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

fn add_rho(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x + 1)).collect()
}

/// Freudenthal's recursion, summing multiplicities over dominant weights.
fn freudenthal_dim(rs: &RootSystem, lambda: &[u64]) -> u64 {
    let geo = WeightGeometry::new(rs);
    let rank = geo.rank;
    let lam: Vec<i64> = lambda.iter().map(|&c| c as i64).collect();

    // Enumerate all cone points lambda - sum n_i alpha_i with total height
    // bounded by the height of lambda - w0(lambda); collect the dominant ones.
    let dual = rs.dual_weight(&HighestWeight(lambda.to_vec()));
    let twice: Vec<Rat> = (0..rank)
        .map(|i| rat(lam[i] + dual.0[i] as i64))
        .collect();
    let height_bound: Rat = geo.to_root_coords(&twice).into_iter().sum();
    assert!(height_bound.is_integer());
    let hmax: i64 = height_bound.to_integer().try_into().unwrap();

    let simple_fund: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut a = vec![0i64; rank];
            a[i] = 1;
            geo.root_to_fund(&a)
        })
        .collect();

    let mut dominants: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier = vec![(lam.clone(), 0i64)];
    seen.insert(lam.clone());
    while let Some((v, h)) = frontier.pop() {
        if v.iter().all(|&x| x >= 0) {
            dominants.insert(v.clone());
        }
        if h >= hmax {
            continue;
        }
        for s in &simple_fund {
            let w: Vec<i64> = v.iter().zip(s).map(|(a, b)| a - b).collect();
            if seen.insert(w.clone()) {
                frontier.push((w, h + 1));
            }
        }
    }

    // Order dominant candidates by decreasing (mu + rho)^2: the recursion
    // at mu only consults strictly higher weights.
    let lam_rho_sq = geo.inner(&add_rho(&lam), &add_rho(&lam));
    let mut ordered: Vec<(Rat, Vec<i64>)> = dominants
        .into_iter()
        .map(|m| (geo.inner(&add_rho(&m), &add_rho(&m)), m))
        .filter(|(sq, m)| *m == lam || *sq < lam_rho_sq)
        .collect();
    ordered.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut mult: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
    let lookup = |mult: &BTreeMap<Vec<i64>, Rat>, geo: &WeightGeometry, v: &[i64]| -> Rat {
        let d = geo.dominant_rep(v);
        mult.get(&d).cloned().unwrap_or_else(Rat::zero)
    };

    for (mu_rho_sq, mu) in &ordered {
        if *mu == lam {
            mult.insert(mu.clone(), Rat::one());
            continue;
        }
        let denom = &lam_rho_sq - mu_rho_sq;
        assert!(!denom.is_zero());
        let mut rhs = Rat::zero();
        for alpha in &geo.pos_roots {
            let alpha_fund = geo.root_to_fund(alpha);
            let mut k = 1i64;
            loop {
                let shifted: Vec<i64> = (0..rank).map(|j| mu[j] + k * alpha_fund[j]).collect();
                let m = lookup(&mult, &geo, &shifted);
                if m.is_zero() {
                    // weights in the alpha direction form an unbroken string
                    break;
                }
                let pairing = geo.inner_weight_root(&to_rat(&shifted), alpha);
                rhs += m * pairing;
                k += 1;
            }
        }
        let value = rat(2) * rhs / denom;
        if !value.is_zero() {
            mult.insert(mu.clone(), value);
        }
    }

    let mut dim = Rat::zero();
    for (m, v) in &mult {
        dim += v * rat(geo.orbit_size(m) as i64);
    }
    assert!(dim.is_integer(), "Freudenthal total must be an integer");
    let d: i64 = dim.to_integer().try_into().unwrap();
    d as u64
}

/// Minuscule check: every coroot pairing of lambda lies in {-1, 0, 1}, in
/// which case the weight system is a single Weyl orbit of multiplicity one.
fn minuscule_orbit_dim(rs: &RootSystem, lambda: &[u64]) -> Option<u64> {
    let geo = WeightGeometry::new(rs);
    let lam: Vec<i64> = lambda.iter().map(|&c| c as i64).collect();
    for coroot in rs.positive_coroots() {
        let pairing: i64 = (0..rs.rank()).map(|i| coroot[i] * lam[i]).sum();
        if pairing.abs() > 1 {
            return None;
        }
    }
    Some(geo.orbit_size(&lam))
}

#[test]
fn freudenthal_agrees_on_all_small_weights() {
    let systems = [
        (TypeLetter::A, 1),
        (TypeLetter::A, 2),
        (TypeLetter::B, 2),
        (TypeLetter::C, 3),
        (TypeLetter::G, 2),
    ];
    for (letter, rank) in systems {
        let rs = RootSystem::new(letter, rank).unwrap();
        for (w, dim) in monotone_filter(&rs, 50) {
            let oracle = freudenthal_dim(&rs, &w.0);
            assert_eq!(dim, oracle, "{letter:?}{rank} weight {:?}", w.0);
        }
    }
}

#[test]
fn freudenthal_confirms_the_paper_degrees() {
    let a5 = RootSystem::new(TypeLetter::A, 5).unwrap();
    assert_eq!(freudenthal_dim(&a5, &[0, 0, 1, 0, 0]), 20);
    assert_eq!(weyl_dim_u64(&a5, &HighestWeight(vec![0, 0, 1, 0, 0])).unwrap(), 20);

    let c3 = RootSystem::new(TypeLetter::C, 3).unwrap();
    assert_eq!(freudenthal_dim(&c3, &[0, 0, 1]), 14);
    assert_eq!(weyl_dim_u64(&c3, &HighestWeight(vec![0, 0, 1])).unwrap(), 14);

    let b5 = RootSystem::new(TypeLetter::B, 5).unwrap();
    assert_eq!(freudenthal_dim(&b5, &[0, 0, 0, 0, 1]), 32);
    assert_eq!(weyl_dim_u64(&b5, &HighestWeight(vec![0, 0, 0, 0, 1])).unwrap(), 32);

    // E7 fundamental on C^56 is minuscule: one orbit of multiplicity one.
    let e7 = RootSystem::new(TypeLetter::E, 7).unwrap();
    assert_eq!(minuscule_orbit_dim(&e7, &[0, 0, 0, 0, 0, 0, 1]), Some(56));
    assert_eq!(
        weyl_dim_u64(&e7, &HighestWeight(vec![0, 0, 0, 0, 0, 0, 1])).unwrap(),
        56
    );
    let e6 = RootSystem::new(TypeLetter::E, 6).unwrap();
    assert_eq!(minuscule_orbit_dim(&e6, &[1, 0, 0, 0, 0, 0]), Some(27));
}

#[test]
fn strict_monotonicity_on_random_comparable_pairs() {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let systems = [
        (TypeLetter::A, 3),
        (TypeLetter::B, 3),
        (TypeLetter::C, 3),
        (TypeLetter::D, 4),
        (TypeLetter::G, 2),
    ];
    let mut checked = 0;
    while checked < 100 {
        let (letter, rank) = systems[rng.gen_range(0..systems.len())];
        let rs = RootSystem::new(letter, rank).unwrap();
        let w: Vec<u64> = (0..rank).map(|_| rng.gen_range(0..3)).collect();
        let mut w2 = w.clone();
        let bumps = rng.gen_range(1..=2);
        for _ in 0..bumps {
            let i = rng.gen_range(0..rank);
            w2[i] += rng.gen_range(1..=2);
        }
        let d1 = hrk_core::weyl::weyl_dim(&rs, &HighestWeight(w.clone())).unwrap();
        let d2 = hrk_core::weyl::weyl_dim(&rs, &HighestWeight(w2.clone())).unwrap();
        assert!(d1 < d2, "{letter:?}{rank}: {w:?} vs {w2:?}");
        checked += 1;
    }
}

#[test]
fn fundamental_dimensions_match_classical_tables() {
    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut r = 1u64;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }
    // classical families up to rank 8
    for n in 1..=8usize {
        let rs = RootSystem::new(TypeLetter::A, n).unwrap();
        for k in 1..=n {
            let mut w = vec![0u64; n];
            w[k - 1] = 1;
            assert_eq!(
                weyl_dim_u64(&rs, &HighestWeight(w)).unwrap(),
                binom(n as u64 + 1, k as u64),
                "A{n} omega_{k}"
            );
        }
    }
    for n in 2..=8usize {
        let rs = RootSystem::new(TypeLetter::B, n).unwrap();
        for k in 1..=n {
            let mut w = vec![0u64; n];
            w[k - 1] = 1;
            let expected = if k == n {
                1u64 << n
            } else {
                binom(2 * n as u64 + 1, k as u64)
            };
            assert_eq!(weyl_dim_u64(&rs, &HighestWeight(w)).unwrap(), expected, "B{n} omega_{k}");
        }
        let rs = RootSystem::new(TypeLetter::C, n).unwrap();
        for k in 1..=n {
            let mut w = vec![0u64; n];
            w[k - 1] = 1;
            let lower = if k >= 2 { binom(2 * n as u64, k as u64 - 2) } else { 0 };
            let expected = binom(2 * n as u64, k as u64) - lower;
            assert_eq!(weyl_dim_u64(&rs, &HighestWeight(w)).unwrap(), expected, "C{n} omega_{k}");
        }
    }
    for n in 4..=8usize {
        let rs = RootSystem::new(TypeLetter::D, n).unwrap();
        for k in 1..=n {
            let mut w = vec![0u64; n];
            w[k - 1] = 1;
            let expected = if k >= n - 1 {
                1u64 << (n - 1)
            } else {
                binom(2 * n as u64, k as u64)
            };
            assert_eq!(weyl_dim_u64(&rs, &HighestWeight(w)).unwrap(), expected, "D{n} omega_{k}");
        }
    }
    // exceptional types
    let g2 = RootSystem::new(TypeLetter::G, 2).unwrap();
    assert_eq!(weyl_dim_u64(&g2, &HighestWeight(vec![1, 0])).unwrap(), 7);
    assert_eq!(weyl_dim_u64(&g2, &HighestWeight(vec![0, 1])).unwrap(), 14);
    let f4 = RootSystem::new(TypeLetter::F, 4).unwrap();
    for (k, expected) in [(1usize, 52u64), (2, 1274), (3, 273), (4, 26)] {
        let mut w = vec![0u64; 4];
        w[k - 1] = 1;
        assert_eq!(weyl_dim_u64(&f4, &HighestWeight(w)).unwrap(), expected, "F4 omega_{k}");
    }
    let e6 = RootSystem::new(TypeLetter::E, 6).unwrap();
    for (k, expected) in [(1usize, 27u64), (2, 78), (3, 351), (4, 2925), (5, 351), (6, 27)] {
        let mut w = vec![0u64; 6];
        w[k - 1] = 1;
        assert_eq!(weyl_dim_u64(&e6, &HighestWeight(w)).unwrap(), expected, "E6 omega_{k}");
    }
    let e7 = RootSystem::new(TypeLetter::E, 7).unwrap();
    for (k, expected) in [
        (1usize, 133u64),
        (2, 912),
        (3, 8645),
        (4, 365750),
        (5, 27664),
        (6, 1539),
        (7, 56),
    ] {
        let mut w = vec![0u64; 7];
        w[k - 1] = 1;
        assert_eq!(weyl_dim_u64(&e7, &HighestWeight(w)).unwrap(), expected, "E7 omega_{k}");
    }
    let e8 = RootSystem::new(TypeLetter::E, 8).unwrap();
    for (k, expected) in [
        (1usize, 3875u64),
        (2, 147250),
        (3, 6696000),
        (4, 6899079264),
        (5, 146325270),
        (6, 2450240),
        (7, 30380),
        (8, 248),
    ] {
        let mut w = vec![0u64; 8];
        w[k - 1] = 1;
        assert_eq!(weyl_dim_u64(&e8, &HighestWeight(w)).unwrap(), expected, "E8 omega_{k}");
    }
}
