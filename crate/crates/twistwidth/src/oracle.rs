//! Brute-force baselines and seeded instance generators.
//!
//! Everything here exists to certify the shortcut implementations in the
//! other modules against literal definitions: the 2^n twist sweep for the
//! maximum twist width, and random set systems, delta-matroids and ribbon
//! graphs for the cross-check battery. All generation is a pure function
//! of the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monotone::{self, ChoiceStrategy};
use crate::ribbon::{are_isomorphic, Edge, RibbonGraph};
use crate::set_system::{SetSystem, Subset};

const SWEEP_CAP: u32 = 20;
const REJECTION_BUDGET: u32 = 10_000;

/// Literal maximum of `ω(D Δ A)` over every subset `A` of the ground set.
pub fn max_twist_width_bruteforce(d: &SetSystem) -> Result<u32> {
    if !d.is_proper() {
        return Err(Error::ImproperSystem);
    }
    if d.ground_size() > SWEEP_CAP {
        return Err(Error::TooLarge {
            size: d.ground_size(),
            cap: SWEEP_CAP,
        });
    }
    let mut best = 0;
    for a in d.all_subsets() {
        best = best.max(d.twist_width(a)?);
    }
    Ok(best)
}

/// Every subset whose twist attains the brute-force maximum, in canonical
/// order.
pub fn attaining_subsets_bruteforce(d: &SetSystem) -> Result<Vec<Subset>> {
    let target = max_twist_width_bruteforce(d)?;
    let mut out: Vec<Subset> = d
        .all_subsets()
        .filter(|&a| d.twist_width(a).unwrap() == target)
        .collect();
    out.sort();
    Ok(out)
}

/// A seeded proper set system on `[n]`: each subset is kept independently
/// with a probability itself drawn from the seed; re-rolled while empty.
pub fn random_set_system(seed: u64, n: u32) -> SetSystem {
    assert!(n >= 1 && n <= 10, "random_set_system expects 1 <= n <= 10");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e7_5e7);
    loop {
        let p: f64 = rng.gen_range(0.05..0.6);
        let family: Vec<Subset> = (0u64..(1u64 << n))
            .filter(|_| rng.gen_bool(p))
            .map(Subset::from_bits)
            .collect();
        if !family.is_empty() {
            return SetSystem::new(n, family).unwrap();
        }
    }
}

/// A seeded certified delta-matroid on `[n]`, produced by one of three
/// strategies: rejection sampling of random families through the axiom
/// check, a random twist of a uniform-matroid family, or the delta-matroid
/// of a random ribbon graph.
pub fn random_delta_matroid(seed: u64, n: u32) -> Result<SetSystem> {
    assert!(n >= 1 && n <= 8, "random_delta_matroid expects 1 <= n <= 8");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xde17a);
    let out = match rng.gen_range(0u8..3) {
        0 => {
            let mut found = None;
            for _ in 0..REJECTION_BUDGET {
                let size = rng.gen_range(1..=4usize);
                let family: Vec<Subset> = (0..size)
                    .map(|_| Subset::from_bits(rng.gen_range(0..(1u64 << n))))
                    .collect();
                let candidate = SetSystem::new(n, family).unwrap();
                if candidate.check_symmetric_exchange()?.holds() {
                    found = Some(candidate);
                    break;
                }
            }
            found.ok_or(Error::GenerationExhausted(REJECTION_BUDGET))?
        }
        1 => {
            let k = rng.gen_range(0..=n);
            let bases: Vec<Subset> = (0u64..(1u64 << n))
                .map(Subset::from_bits)
                .filter(|s| s.len() == k)
                .collect();
            let uniform = SetSystem::new(n, bases).unwrap();
            let a = Subset::from_bits(rng.gen_range(0..(1u64 << n)));
            uniform.twist(a)?
        }
        _ => {
            let v = rng.gen_range(1..=2u32);
            let g = random_ribbon_graph(rng.gen(), v, n);
            g.delta_matroid()?
        }
    };
    debug_assert!(out.check_symmetric_exchange()?.holds());
    Ok(out)
}

/// A seeded random ribbon graph: `2e` half-edges distributed over `v`
/// vertices in shuffled order with random twist flags. Always valid.
pub fn random_ribbon_graph(seed: u64, v: u32, e: u32) -> RibbonGraph {
    assert!(v >= 1, "random_ribbon_graph expects at least one vertex");
    assert!(e <= 20, "random_ribbon_graph expects at most 20 edges");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x41bb0);
    let edges: Vec<Edge> = (0..e)
        .map(|_| Edge {
            twisted: rng.gen_bool(0.5),
        })
        .collect();
    let mut half_edges: Vec<usize> = (0..2 * e as usize).collect();
    half_edges.shuffle(&mut rng);
    let mut vertices: Vec<Vec<usize>> = vec![Vec::new(); v as usize];
    for h in half_edges {
        let owner = rng.gen_range(0..v as usize);
        vertices[owner].push(h);
    }
    RibbonGraph::new(edges, vertices).expect("generated rotation is a partition")
}

/// Result of one property in the certification battery.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: &'static str,
    pub pass: bool,
    pub failures: u32,
    /// First failing instance, serialized for replay.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CertifyReport {
    pub seed: u64,
    pub trials: u32,
    pub results: Vec<PropertyResult>,
}

impl CertifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// Hooks for harness self-tests: lets a caller replace the checked
/// implementation of a property with a deliberate mutant and confirm the
/// battery reports exactly that property as failing.
#[derive(Default)]
pub struct CertifyHooks {
    pub max_twist_width: Option<Box<dyn Fn(&SetSystem) -> u32>>,
}

/// Runs the full cross-check battery on `trials` seeded instances.
pub fn certify_theorems(seed: u64, trials: u32) -> CertifyReport {
    certify_theorems_with_hooks(seed, trials, &CertifyHooks::default())
}

pub fn certify_theorems_with_hooks(seed: u64, trials: u32, hooks: &CertifyHooks) -> CertifyReport {
    assert!(trials >= 1);
    let mut battery = Battery::new(seed, hooks);
    for trial in 0..u64::from(trials) {
        battery.run_trial(seed.wrapping_add(trial.wrapping_mul(0x9e3779b97f4a7c15)));
    }
    CertifyReport {
        seed,
        trials,
        results: battery.finish(),
    }
}

struct Check {
    name: &'static str,
    failures: u32,
    first_failure: Option<String>,
}

struct Battery<'h> {
    hooks: &'h CertifyHooks,
    checks: Vec<Check>,
}

const CHECK_NAMES: &[&str] = &[
    "pairwise_bruteforce_equivalence",
    "max_attained_in_family",
    "twist_involution",
    "twist_composition",
    "width_shift_bounds",
    "axiom_twist_closure",
    "sandwich_bounds",
    "monotone_trace_verified",
    "partial_dual_is_twist",
    "dual_genus_formula",
    "dual_involution",
    "width_equals_genus",
    "max_pd_genus_three_ways",
];

impl<'h> Battery<'h> {
    fn new(_seed: u64, hooks: &'h CertifyHooks) -> Battery<'h> {
        Battery {
            hooks,
            checks: CHECK_NAMES
                .iter()
                .map(|&name| Check {
                    name,
                    failures: 0,
                    first_failure: None,
                })
                .collect(),
        }
    }

    fn record(&mut self, name: &str, pass: bool, instance: impl Fn() -> String) {
        let check = self
            .checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("unknown check name");
        if !pass {
            check.failures += 1;
            if check.first_failure.is_none() {
                check.first_failure = Some(instance());
            }
        }
    }

    fn max_twist_width(&self, d: &SetSystem) -> u32 {
        match &self.hooks.max_twist_width {
            Some(f) => f(d),
            None => d.max_twist_width().unwrap(),
        }
    }

    fn run_trial(&mut self, trial_seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);

        // --- proper set system checks ---
        let n = rng.gen_range(1..=8u32);
        let d = random_set_system(rng.gen(), n);
        let d_json = crate::io::set_system_to_json(&d);
        let instance = || d_json.clone();

        let brute = max_twist_width_bruteforce(&d).unwrap();
        self.record(
            "pairwise_bruteforce_equivalence",
            self.max_twist_width(&d) == brute,
            instance,
        );

        let attained_in_family = d
            .family()
            .iter()
            .any(|&f| d.twist_width(f).unwrap() == brute);
        self.record("max_attained_in_family", attained_in_family, instance);

        let a = Subset::from_bits(rng.gen_range(0..(1u64 << n)));
        let b = Subset::from_bits(rng.gen_range(0..(1u64 << n)));
        let twisted = d.twist(a).unwrap();
        self.record(
            "twist_involution",
            twisted.twist(a).unwrap() == d,
            instance,
        );
        self.record(
            "twist_composition",
            twisted.twist(b).unwrap() == d.twist(a.sym_diff(b)).unwrap(),
            instance,
        );

        let e = rng.gen_range(1..=n);
        let shifted = d.twist(Subset::singleton(e)).unwrap();
        let (w0, w1) = (d.width_summary().unwrap(), shifted.width_summary().unwrap());
        let bounded = w0.r_min.abs_diff(w1.r_min) <= 1 && w0.r_max.abs_diff(w1.r_max) <= 1;
        self.record("width_shift_bounds", bounded, instance);

        // --- delta-matroid checks ---
        let n_dm = rng.gen_range(1..=6u32);
        if let Ok(dm) = random_delta_matroid(rng.gen(), n_dm) {
            let dm_json = crate::io::set_system_to_json(&dm);
            let instance = || dm_json.clone();

            let a = Subset::from_bits(rng.gen_range(0..(1u64 << n_dm)));
            let closure = dm
                .twist(a)
                .unwrap()
                .check_symmetric_exchange()
                .unwrap()
                .holds();
            self.record("axiom_twist_closure", closure, instance);

            let sandwich_ok = dm.family().iter().all(|&f0| match dm.sandwich(f0) {
                Ok((f1, f2)) => f1.is_subset_of(f0) && f0.is_subset_of(f2),
                Err(_) => false,
            });
            self.record("sandwich_bounds", sandwich_ok, instance);

            let trace_ok = match monotone::monotone_sequence(&dm, &ChoiceStrategy::Canonical) {
                Ok(trace) => {
                    trace.sequence.len() as u32 == trace.final_set.len()
                        && monotone::verify_trace(&dm, &trace).unwrap().passed()
                }
                Err(_) => false,
            };
            self.record("monotone_trace_verified", trace_ok, instance);
        }

        // --- ribbon graph checks ---
        let v = rng.gen_range(1..=3u32);
        let e = rng.gen_range(0..=5u32);
        let g = random_ribbon_graph(rng.gen(), v, e);
        let g_json = crate::io::ribbon_graph_to_json(&g);
        let instance = || g_json.clone();

        let dg = g.delta_matroid().unwrap();
        self.record(
            "width_equals_genus",
            dg.width().unwrap() == g.euler_genus()
                && dg.check_symmetric_exchange().unwrap().holds(),
            instance,
        );

        let mut thm25 = true;
        let mut formula = true;
        let mut involution = true;
        for bits in 0u64..(1u64 << e) {
            let a = Subset::from_bits(bits);
            let dual = g.partial_dual(a).unwrap();
            thm25 &= dual.delta_matroid().unwrap() == dg.twist(a).unwrap();
            formula &= dual.euler_genus() == g.pd_genus_formula(a).unwrap();
            involution &= are_isomorphic(&dual.partial_dual(a).unwrap(), &g);
        }
        self.record("partial_dual_is_twist", thm25, instance);
        self.record("dual_genus_formula", formula, instance);
        self.record("dual_involution", involution, instance);

        self.record(
            "max_pd_genus_three_ways",
            std::panic::catch_unwind(|| g.max_pd_genus().unwrap()).is_ok(),
            instance,
        );
    }

    fn finish(self) -> Vec<PropertyResult> {
        self.checks
            .into_iter()
            .map(|c| PropertyResult {
                name: c.name,
                pass: c.failures == 0,
                failures: c.failures,
                first_failure: c.first_failure,
            })
            .collect()
    }
}
