//! Right coset representatives for Γ₀(N) and their verification.
//!
//!     cargo run --example gamma0_cosets -- 30

use fundom::cosets::{theta0, verify};
use fundom::projline::normalize;
use fundom::words::row_map;
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse()).expect("N must be an integer");
    let level = Level::new(n)?;
    let list = theta0(level);

    for rep in list.reps() {
        let (c, d) = row_map(rep.matrix(), level);
        let class = normalize(c.value(), d.value(), level)?;
        println!("{:<14} {:<22} bottom row -> {class}", rep.word().to_string(), rep.matrix().to_string());
    }

    let report = verify(&list)?;
    println!("\n{report}");
    Ok(())
}
