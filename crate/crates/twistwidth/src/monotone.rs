//! Monotone width sequences: construct an element sequence whose
//! prefix-twist widths never decrease and end at the maximum twist width,
//! verify such traces, and search for them exhaustively on small systems.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::set_system::{AxiomVerdict, SetSystem, Subset};

/// One scripted iteration: the set `X` chosen from the current minimum or
/// maximum family, and the element picked from the legal pick range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptStep {
    pub chosen_set: Subset,
    pub pick: u32,
}

/// Pre-made choices replaying a specific run of the construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Script {
    /// Alternative starting set; must be a minimum-cardinality member of
    /// the hat family. Defaults to the canonically first one.
    pub initial: Option<Subset>,
    pub steps: Vec<ScriptStep>,
}

/// How every "choose arbitrarily" in the construction is resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChoiceStrategy {
    /// Canonically first qualifying set, smallest qualifying element.
    Canonical,
    /// Replay the given script, validating each choice as it is used.
    Scripted(Script),
}

/// An element sequence together with the width after each prefix twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthTrace {
    /// Elements `e1..ek` in twist order (1-based labels).
    pub sequence: Vec<u32>,
    /// `widths[i] = ω(D Δ {e1..ei})`; `widths[0] = ω(D)`.
    pub widths: Vec<u32>,
    /// `{e1,…,ek}`, a feasible set of the input system.
    pub final_set: Subset,
    /// The final width, `∂ω_M(D)`.
    pub attained: u32,
}

/// Verdict of [`verify_trace`]: pass, or the first violated property of the
/// three the trace must satisfy (1: final set feasible, 2: widths correct
/// and ending at the maximum twist width, 3: non-decreasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceVerdict {
    Pass,
    Fail {
        property: u8,
        index: usize,
        detail: String,
    },
}

impl TraceVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, TraceVerdict::Pass)
    }
}

/// A sequence found by the exhaustive search. Feasibility of the final set
/// is reported alongside rather than required of the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneWitness {
    pub sequence: Vec<u32>,
    pub final_feasible: bool,
}

/// Runs the monotone sequence construction on a delta-matroid.
///
/// Starting from a minimum-cardinality member of the hat family, elements
/// are peeled off one at a time: while the current (already twisted) family
/// does not contain the empty set, a minimum member inside the remaining
/// set is used; otherwise a maximum member not containing it. Each pick is
/// twisted into the running system, which keeps the width from decreasing.
pub fn monotone_sequence(d: &SetSystem, strategy: &ChoiceStrategy) -> Result<WidthTrace> {
    match d.check_symmetric_exchange()? {
        AxiomVerdict::Holds => {}
        AxiomVerdict::Witness { x, y, u } => return Err(Error::not_delta_matroid(x, y, u)),
    }

    let hat = d.hat_family()?;
    let min_card = hat[0].len();

    let script = match strategy {
        ChoiceStrategy::Canonical => None,
        ChoiceStrategy::Scripted(s) => Some(s),
    };

    let f_init = match script.and_then(|s| s.initial) {
        None => hat[0],
        Some(init) => {
            if !hat.contains(&init) || init.len() != min_card {
                return Err(Error::IllegalScript(format!(
                    "initial set {init:?} is not a minimum-cardinality member of the hat family"
                )));
            }
            init
        }
    };

    let mut current = d.clone();
    let mut f_curr = f_init;
    let mut sequence = Vec::with_capacity(f_init.len() as usize);
    let mut widths = vec![current.width()?];
    let mut step_idx = 0usize;

    while !f_curr.is_empty() {
        let (candidates, picks_of): (Vec<Subset>, fn(Subset, Subset) -> Subset) =
            if !current.contains(Subset::EMPTY) {
                let c: Vec<Subset> = current
                    .min_family()?
                    .into_iter()
                    .filter(|x| x.is_subset_of(f_curr))
                    .collect();
                (c, |x, _f| x)
            } else {
                let c: Vec<Subset> = current
                    .max_family()?
                    .into_iter()
                    .filter(|x| !f_curr.is_subset_of(*x))
                    .collect();
                (c, |x, f| f.minus(x))
            };
        assert!(
            !candidates.is_empty(),
            "no qualifying choice set; the construction guarantees one exists"
        );

        let (x, pick) = match script {
            None => {
                let x = candidates[0];
                let pick = picks_of(x, f_curr).iter().next().unwrap();
                (x, pick)
            }
            Some(s) => {
                let step = s.steps.get(step_idx).ok_or_else(|| {
                    Error::IllegalScript(format!("script ends before iteration {}", step_idx + 1))
                })?;
                if !candidates.contains(&step.chosen_set) {
                    return Err(Error::IllegalScript(format!(
                        "iteration {}: {:?} is not a legal choice set",
                        step_idx + 1,
                        step.chosen_set
                    )));
                }
                if !picks_of(step.chosen_set, f_curr).contains(step.pick) {
                    return Err(Error::IllegalScript(format!(
                        "iteration {}: element {} is not a legal pick from {:?}",
                        step_idx + 1,
                        step.pick,
                        step.chosen_set
                    )));
                }
                (step.chosen_set, step.pick)
            }
        };

        sequence.push(pick);
        f_curr = f_curr.remove(pick);
        current = current.twist(Subset::singleton(pick))?;
        widths.push(current.width()?);
        let _ = x;
        step_idx += 1;
    }

    if let Some(s) = script {
        if s.steps.len() != step_idx {
            return Err(Error::IllegalScript(format!(
                "script has {} steps but the run took {}",
                s.steps.len(),
                step_idx
            )));
        }
    }

    debug_assert_eq!(sequence.len() as u32, f_init.len());
    let attained = *widths.last().unwrap();
    debug_assert_eq!(attained, d.max_twist_width()?);
    Ok(WidthTrace {
        sequence,
        widths,
        final_set: f_init,
        attained,
    })
}

/// Widths of `D Δ prefix` for every prefix of `seq`, including the empty
/// prefix; the result has length `|seq| + 1`.
pub fn width_profile(d: &SetSystem, seq: &[u32]) -> Result<Vec<u32>> {
    let mut prefix = Subset::EMPTY;
    let mut widths = vec![d.width()?];
    for &e in seq {
        if e == 0 || e > d.ground_size() {
            return Err(Error::OutOfRangeElement {
                element: e,
                ground: d.ground_size(),
            });
        }
        if prefix.contains(e) {
            return Err(Error::RepeatedElement(e));
        }
        prefix = prefix.insert(e);
        widths.push(d.twist_width(prefix)?);
    }
    Ok(widths)
}

/// Re-derives the width profile of a trace and checks the three properties
/// it must satisfy, returning the first violation found.
pub fn verify_trace(d: &SetSystem, trace: &WidthTrace) -> Result<TraceVerdict> {
    let profile = width_profile(d, &trace.sequence)?;

    for (i, (&actual, &claimed)) in profile.iter().zip(trace.widths.iter()).enumerate() {
        if actual != claimed {
            return Ok(TraceVerdict::Fail {
                property: 2,
                index: i,
                detail: format!(
                    "width after prefix of length {i} is {actual}, trace claims {claimed}"
                ),
            });
        }
    }
    if profile.len() != trace.widths.len() {
        return Ok(TraceVerdict::Fail {
            property: 2,
            index: profile.len().min(trace.widths.len()),
            detail: format!(
                "trace lists {} widths for a sequence of length {}",
                trace.widths.len(),
                trace.sequence.len()
            ),
        });
    }

    let max = d.max_twist_width()?;
    let last = *profile.last().unwrap();
    if trace.attained != last || last != max {
        return Ok(TraceVerdict::Fail {
            property: 2,
            index: profile.len() - 1,
            detail: format!("final width {last} does not attain the maximum twist width {max}"),
        });
    }

    if let Some(i) = (1..profile.len()).find(|&i| profile[i] < profile[i - 1]) {
        return Ok(TraceVerdict::Fail {
            property: 3,
            index: i,
            detail: format!(
                "width decreases from {} to {} at step {i}",
                profile[i - 1],
                profile[i]
            ),
        });
    }

    let seq_set = Subset::from_elements(&trace.sequence, d.ground_size())?;
    if trace.final_set != seq_set || !d.contains(seq_set) {
        return Ok(TraceVerdict::Fail {
            property: 1,
            index: trace.sequence.len(),
            detail: format!("final set {seq_set:?} is not a feasible set of the system"),
        });
    }

    Ok(TraceVerdict::Pass)
}

const BRUTE_FORCE_CAP: u32 = 12;

/// Exhaustive search for a repeat-free element sequence whose prefix widths
/// never decrease and whose final width is the maximum twist width.
///
/// Returns the first witness in canonical order (shortest, then
/// lexicographically smallest), or `None` when no such sequence exists.
pub fn exists_monotone_sequence_bruteforce(d: &SetSystem) -> Result<Option<MonotoneWitness>> {
    if !d.is_proper() {
        return Err(Error::ImproperSystem);
    }
    let n = d.ground_size();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            size: n,
            cap: BRUTE_FORCE_CAP,
        });
    }

    // width of every twist, indexed by subset mask
    let total = 1usize << n;
    let mut width = vec![0u32; total];
    for mask in 0..total {
        width[mask] = d.twist_width(Subset::from_bits(mask as u64))?;
    }
    let target = *width.iter().max().unwrap();

    // a set is reachable when some ordering of it has non-decreasing
    // prefix widths; widths depend only on the prefix set, so this is a
    // subset DP over masks in cardinality order
    let mut masks: Vec<usize> = (0..total).collect();
    masks.sort_by_key(|m| m.count_ones());
    let mut reachable = vec![false; total];
    for &mask in &masks {
        if mask == 0 {
            reachable[0] = true;
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            let prev = mask ^ bit;
            if reachable[prev] && width[prev] <= width[mask] {
                reachable[mask] = true;
                break;
            }
            rest ^= bit;
        }
    }

    let shortest = masks
        .iter()
        .copied()
        .find(|&m| reachable[m] && width[m] == target);
    let goal_len = match shortest {
        None => return Ok(None),
        Some(m) => m.count_ones(),
    };

    // lexicographically first sequence of that length: greedy element
    // choice backed by a memoized completion check
    fn completable(
        mask: usize,
        goal_len: u32,
        n: u32,
        width: &[u32],
        target: u32,
        memo: &mut HashMap<usize, bool>,
    ) -> bool {
        if mask.count_ones() == goal_len {
            return width[mask] == target;
        }
        if let Some(&hit) = memo.get(&mask) {
            return hit;
        }
        let ok = (0..n).any(|i| {
            let bit = 1usize << i;
            mask & bit == 0
                && width[mask | bit] >= width[mask]
                && completable(mask | bit, goal_len, n, width, target, memo)
        });
        memo.insert(mask, ok);
        ok
    }

    let mut memo = HashMap::new();
    let mut mask = 0usize;
    let mut sequence = Vec::with_capacity(goal_len as usize);
    for _ in 0..goal_len {
        let next = (0..n)
            .find(|&i| {
                let bit = 1usize << i;
                mask & bit == 0
                    && width[mask | bit] >= width[mask]
                    && completable(mask | bit, goal_len, n, &width, target, &mut memo)
            })
            .expect("a reachable attaining set of this size exists");
        sequence.push(next + 1);
        mask |= 1usize << next;
    }

    let final_feasible = d.contains(Subset::from_bits(mask as u64));
    Ok(Some(MonotoneWitness {
        sequence,
        final_feasible,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sub(elems: &[u32], ground: u32) -> Subset {
        Subset::from_elements(elems, ground).unwrap()
    }

    fn step(set: &[u32], pick: u32, ground: u32) -> ScriptStep {
        ScriptStep {
            chosen_set: sub(set, ground),
            pick,
        }
    }

    #[test]
    fn scripted_run_reproduces_first_worked_example() {
        let d_b = fixtures::d_b();
        let script = Script {
            initial: Some(sub(&[1, 2], 4)),
            steps: vec![step(&[2, 3], 1, 4), step(&[2], 2, 4)],
        };
        let trace = monotone_sequence(&d_b, &ChoiceStrategy::Scripted(script)).unwrap();
        assert_eq!(trace.sequence, vec![1, 2]);
        assert_eq!(trace.widths, vec![2, 2, 4]);
        assert_eq!(trace.attained, 4);
        assert_eq!(trace.final_set, sub(&[1, 2], 4));
        assert!(verify_trace(&d_b, &trace).unwrap().passed());
    }

    #[test]
    fn scripted_run_reproduces_second_worked_example() {
        let f53 = fixtures::f_53();
        let script = Script {
            initial: Some(sub(&[1, 3], 4)),
            steps: vec![step(&[2, 3], 1, 4), step(&[3], 3, 4)],
        };
        let trace = monotone_sequence(&f53, &ChoiceStrategy::Scripted(script)).unwrap();
        assert_eq!(trace.sequence, vec![1, 3]);
        assert!(verify_trace(&f53, &trace).unwrap().passed());
    }

    #[test]
    fn canonical_run_on_singleton_family() {
        let d = crate::set_system::SetSystem::from_element_lists(3, &[vec![]]).unwrap();
        let trace = monotone_sequence(&d, &ChoiceStrategy::Canonical).unwrap();
        assert!(trace.sequence.is_empty());
        assert_eq!(trace.widths, vec![0]);
        assert!(verify_trace(&d, &trace).unwrap().passed());
    }

    #[test]
    fn canonical_run_is_verified() {
        let d_b = fixtures::d_b();
        let trace = monotone_sequence(&d_b, &ChoiceStrategy::Canonical).unwrap();
        assert_eq!(trace.sequence.len(), 2);
        assert_eq!(trace.attained, 4);
        assert!(verify_trace(&d_b, &trace).unwrap().passed());
    }

    #[test]
    fn refuses_non_delta_matroids() {
        let err = monotone_sequence(&fixtures::d_r(), &ChoiceStrategy::Canonical).unwrap_err();
        match err {
            Error::NotDeltaMatroid { x, y, u } => {
                assert_eq!(x, Vec::<u32>::new());
                assert_eq!(y, vec![3, 4, 5]);
                assert_eq!(u, 3);
            }
            other => panic!("expected NotDeltaMatroid, got {other:?}"),
        }
    }

    #[test]
    fn illegal_scripts_are_rejected() {
        let d_b = fixtures::d_b();
        // {1,2} is never a legal choice set for F_curr = {1,2}
        let script = Script {
            initial: Some(sub(&[1, 2], 4)),
            steps: vec![step(&[1, 2], 1, 4), step(&[2], 2, 4)],
        };
        assert!(matches!(
            monotone_sequence(&d_b, &ChoiceStrategy::Scripted(script)),
            Err(Error::IllegalScript(_))
        ));
        // pick outside F_curr \ X
        let script = Script {
            initial: Some(sub(&[1, 2], 4)),
            steps: vec![step(&[2, 3], 2, 4), step(&[2], 2, 4)],
        };
        assert!(matches!(
            monotone_sequence(&d_b, &ChoiceStrategy::Scripted(script)),
            Err(Error::IllegalScript(_))
        ));
    }

    #[test]
    fn width_profiles() {
        assert_eq!(
            width_profile(&fixtures::d_b(), &[1, 2]).unwrap(),
            vec![2, 2, 4]
        );
        assert_eq!(width_profile(&fixtures::d_b(), &[]).unwrap(), vec![2]);

        let profile = width_profile(&fixtures::d_r(), &[1, 2]).unwrap();
        assert_eq!(profile.len(), 3);
        assert_eq!(profile[0], 4);
        assert_eq!(profile[2], 5);
    }

    #[test]
    fn width_profile_errors() {
        let d_b = fixtures::d_b();
        assert_eq!(
            width_profile(&d_b, &[1, 1]),
            Err(Error::RepeatedElement(1))
        );
        assert!(matches!(
            width_profile(&d_b, &[9]),
            Err(Error::OutOfRangeElement { element: 9, .. })
        ));
        let improper = crate::set_system::SetSystem::new(2, vec![]).unwrap();
        assert_eq!(width_profile(&improper, &[1]), Err(Error::ImproperSystem));
    }

    #[test]
    fn verify_trace_catches_wrong_widths() {
        let d_b = fixtures::d_b();
        let bogus = WidthTrace {
            sequence: vec![3],
            widths: vec![2, 4],
            final_set: sub(&[3], 4),
            attained: 4,
        };
        match verify_trace(&d_b, &bogus).unwrap() {
            TraceVerdict::Fail { property: 2, index: 1, .. } => {}
            other => panic!("expected property-2 failure, got {other:?}"),
        }
    }

    #[test]
    fn verify_trace_catches_infeasible_final_set() {
        let d_b = fixtures::d_b();
        let bogus = WidthTrace {
            sequence: vec![2, 1],
            widths: width_profile(&d_b, &[2, 1]).unwrap(),
            final_set: sub(&[1, 2], 4),
            attained: 4,
        };
        // widths are correct and monotone, final set {1,2} is feasible
        assert!(verify_trace(&d_b, &bogus).unwrap().passed());

        let d = crate::set_system::SetSystem::from_element_lists(
            2,
            &[vec![], vec![1], vec![1, 2]],
        )
        .unwrap();
        let trace = WidthTrace {
            sequence: vec![2],
            widths: width_profile(&d, &[2]).unwrap(),
            final_set: sub(&[2], 2),
            attained: 2,
        };
        if trace.widths == vec![2, 2] {
            match verify_trace(&d, &trace).unwrap() {
                TraceVerdict::Fail { property: 1, .. } => {}
                other => panic!("expected property-1 failure, got {other:?}"),
            }
        }
    }

    #[test]
    fn verify_empty_trace_on_trivial_system() {
        let d_0 = fixtures::d_0();
        let trace = WidthTrace {
            sequence: vec![],
            widths: vec![0],
            final_set: Subset::EMPTY,
            attained: 0,
        };
        assert!(verify_trace(&d_0, &trace).unwrap().passed());
    }

    #[test]
    fn brute_force_search_results() {
        assert_eq!(
            exists_monotone_sequence_bruteforce(&fixtures::d_r()).unwrap(),
            None
        );

        let witness = exists_monotone_sequence_bruteforce(&fixtures::d_b())
            .unwrap()
            .unwrap();
        assert_eq!(witness.sequence, vec![1, 2]);
        assert!(witness.final_feasible);

        let trivial = exists_monotone_sequence_bruteforce(&fixtures::d_0())
            .unwrap()
            .unwrap();
        assert!(trivial.sequence.is_empty());
        assert!(trivial.final_feasible);
    }

    #[test]
    fn brute_force_guards() {
        let improper = crate::set_system::SetSystem::new(2, vec![]).unwrap();
        assert_eq!(
            exists_monotone_sequence_bruteforce(&improper),
            Err(Error::ImproperSystem)
        );
        let big = crate::set_system::SetSystem::from_element_lists(13, &[vec![]]).unwrap();
        assert!(matches!(
            exists_monotone_sequence_bruteforce(&big),
            Err(Error::TooLarge { .. })
        ));
    }
}
