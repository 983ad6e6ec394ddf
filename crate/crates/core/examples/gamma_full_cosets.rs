//! Representatives for (±I)Γ(N): translates T^l of the Γ₁(N) list.
//!
//!     cargo run --example gamma_full_cosets -- 5

use fundom::cayley::build_graph;
use fundom::cosets::{theta_full, verify};
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(5), |s| s.parse()).expect("N must be an integer");
    let level = Level::new(n)?;
    let list = theta_full(level);
    let report = verify(&list)?;
    println!("{report}");
    println!("connected: {}", build_graph(&list)?.is_connected());
    println!("first reps:");
    for w in list.words().take(10) {
        println!("  {w}");
    }
    Ok(())
}
