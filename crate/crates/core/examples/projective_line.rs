//! The projective line over Z/NZ: preferred elements, the function M on the
//! points at infinity, and the table of M_j.
//!
//!     cargo run --example projective_line -- 30

use fundom::projline::{enumerate_p1, m_distribution, m_table, PointKind};
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse()).expect("N must be an integer");
    let level = Level::new(n)?;

    let points = enumerate_p1(level);
    let at_infinity: Vec<_> = points.iter().filter(|p| p.kind() == PointKind::Infinity).collect();
    println!("|P1(Z/{n})| = {} ({} affine, {} at infinity)", points.len(), points.len() - at_infinity.len(), at_infinity.len());

    println!("\npoints at infinity with M > 0:");
    for p in at_infinity.iter().filter(|p| p.m_value() > Some(0)) {
        println!("  {p}  M = {}", p.m_value().unwrap());
    }

    println!("\nM_j:");
    for (m, js) in m_table(level).by_value() {
        let js: Vec<String> = js.iter().map(|j| j.to_string()).collect();
        println!("  {m}: {}", js.join(", "));
    }
    println!("\ndistribution of M over H: {:?}", m_distribution(level));
    Ok(())
}
