//! Symmetric residues modulo N and unit inverses.
//!
//!     cargo run --example residues -- 30

use fundom::residues::inv_mod;
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse()).expect("N must be an integer");
    let level = Level::new(n)?;
    println!("N = {n}: window [-{}, {}]", level.n1(), level.n2());

    for r in level.residues() {
        match inv_mod(r) {
            Ok(inv) => println!("{r:>4}  unit, inverse {inv}"),
            Err(_) => println!("{r:>4}  nonunit"),
        }
    }
    let nonunits: Vec<String> = level.nonunits().map(|r| r.to_string()).collect();
    println!("{} nonunits: {}", nonunits.len(), nonunits.join(" "));
    Ok(())
}
