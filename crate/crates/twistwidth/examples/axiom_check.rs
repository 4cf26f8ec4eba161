//! Checks the symmetric exchange axiom on two fixture systems: one that
//! satisfies it and one that fails with a concrete witness.

use twistwidth::fixtures;
use twistwidth::AxiomVerdict;

fn main() {
    for (name, d) in [("D_B", fixtures::d_b()), ("D_R", fixtures::d_r())] {
        print!("{name}: ");
        match d.check_symmetric_exchange().unwrap() {
            AxiomVerdict::Holds => println!("symmetric exchange holds"),
            AxiomVerdict::Witness { x, y, u } => {
                println!("fails at X={x:?}, Y={y:?}, u={u}: no v with X∆{{{u},v}} feasible")
            }
        }
    }
}
