//! Builds a monotone width sequence for a delta-matroid: an ordering of
//! some feasible set whose prefix twists have non-decreasing widths ending
//! at the maximum twist width. Runs the canonical strategy, verifies the
//! trace, and replays a fixed script.

use twistwidth::monotone::{self, ChoiceStrategy, Script, ScriptStep};
use twistwidth::{fixtures, Subset};

fn main() {
    let d = fixtures::d_b();

    let trace = monotone::monotone_sequence(&d, &ChoiceStrategy::Canonical).unwrap();
    println!("canonical sequence = {:?}", trace.sequence);
    println!("prefix widths      = {:?}", trace.widths);
    println!("max twist width    = {}", trace.attained);
    println!("verified: {:?}", monotone::verify_trace(&d, &trace).unwrap());

    let script = Script {
        initial: Some(Subset::from_elements(&[1, 2], 4).unwrap()),
        steps: vec![
            ScriptStep { chosen_set: Subset::from_elements(&[2, 3], 4).unwrap(), pick: 1 },
            ScriptStep { chosen_set: Subset::from_elements(&[2], 4).unwrap(), pick: 2 },
        ],
    };
    let replay = monotone::monotone_sequence(&d, &ChoiceStrategy::Scripted(script)).unwrap();
    println!("scripted sequence  = {:?} with widths {:?}", replay.sequence, replay.widths);

    match monotone::exists_monotone_sequence_bruteforce(&fixtures::d_r()).unwrap() {
        Some(w) => println!("D_R: monotone sequence {:?} exists", w.sequence),
        None => println!("D_R: no monotone sequence exists (it is not a delta-matroid)"),
    }
}
