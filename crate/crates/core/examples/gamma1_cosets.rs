//! Representatives for (±I)Γ₁(N): the Γ₀(N) list times representatives of
//! (±I)Γ₁(N)\Γ₀(N). The quotient representatives alone do not give a
//! connected domain.
//!
//!     cargo run --example gamma1_cosets -- 8

use fundom::cayley::{build_graph, CayleyGraph};
use fundom::cosets::{gamma1_quotient_reps, theta1, verify_pairwise};
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(8), |s| s.parse()).expect("N must be an integer");
    let level = Level::new(n)?;

    let quotient = gamma1_quotient_reps(level);
    let names: Vec<String> = quotient.iter().map(|w| w.to_string()).collect();
    println!("quotient reps: {}", names.join(", "));
    let bare = CayleyGraph::from_words(quotient)?;
    println!("  connected on their own: {}", bare.is_connected());

    let list = theta1(level);
    let report = verify_pairwise(&list)?;
    println!("\n{report}");
    println!("connected: {}", build_graph(&list)?.is_connected());
    for w in list.words() {
        println!("  {w}");
    }
    Ok(())
}
