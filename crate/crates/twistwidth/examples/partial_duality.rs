//! Partial duals of a ribbon graph: for every edge subset A, the dual G^A
//! has delta-matroid D(G) ∆ A and its genus follows from boundary counts
//! of (V, A) and (V, E∖A) alone. The sweep locates the genus-maximizing
//! subset and reports the deficiency.

use twistwidth::{fixtures, Subset};

fn main() {
    let g = fixtures::r4();
    let d = g.delta_matroid().unwrap();
    println!("G = R4: genus {}, D(G) = {}", g.euler_genus(), twistwidth::io::set_system_to_json(&d));

    for bits in 0u64..(1u64 << g.edge_count()) {
        let a = Subset::from_bits(bits);
        let dual = g.partial_dual(a).unwrap();
        assert_eq!(dual.delta_matroid().unwrap(), d.twist(a).unwrap());
        assert_eq!(dual.euler_genus(), g.pd_genus_formula(a).unwrap());
        println!("  genus(G^{a:?}) = {}", dual.euler_genus());
    }

    println!("max partial-dual genus = {}", g.max_pd_genus().unwrap());
    println!("deficiency             = {}", g.deficiency().unwrap());
}
