//! Computes the maximum twist width of a set system three ways: the
//! pairwise symmetric-difference rule, an exhaustive sweep over all 2^n
//! twists, and the hat family of feasible sets attaining it.

use twistwidth::{fixtures, oracle};

fn main() {
    let d = fixtures::d_b();
    println!("ground [n] with n = {}", d.ground_size());
    println!("width            = {}", d.width().unwrap());
    println!("max twist width  = {}", d.max_twist_width().unwrap());
    println!("exhaustive sweep = {}", oracle::max_twist_width_bruteforce(&d).unwrap());

    println!("hat family (feasible sets whose twist attains the maximum):");
    for f in d.hat_family().unwrap() {
        println!("  {f:?}  twist width {}", d.twist_width(f).unwrap());
    }
}
