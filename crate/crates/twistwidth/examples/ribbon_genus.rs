//! Boundary components, Euler genus and spanning quasi-trees of ribbon
//! graphs given as signed rotation systems.

use twistwidth::{fixtures, Subset};

fn main() {
    for (name, g) in [
        ("untwisted loop", fixtures::l0()),
        ("twisted loop", fixtures::l1()),
        ("torus", fixtures::t2()),
        ("R4 bouquet", fixtures::r4()),
    ] {
        let full = Subset::from_bits((1u64 << g.edge_count()) - 1);
        println!(
            "{name}: v={} e={} f={} genus={}",
            g.vertex_count(),
            g.edge_count(),
            g.boundary_count(full).unwrap().count,
            g.euler_genus()
        );
        println!("  quasi-trees: {:?}", g.quasi_trees().unwrap());
        println!("  delta-matroid: {}", twistwidth::io::set_system_to_json(&g.delta_matroid().unwrap()));
    }
}
