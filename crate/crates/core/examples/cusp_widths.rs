//! Cusps of the Γ₀(N) domain, their classes and widths.
//!
//!     cargo run --example cusp_widths -- 30

use fundom::domain::cusp_table;
use fundom::Level;

fn main() -> fundom::Result<()> {
    let n: i64 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse()).expect("N must be an integer");
    let table = cusp_table(Level::new(n)?);
    print!("{}", table.to_text());

    println!();
    for class in table.classes() {
        let members: Vec<String> = class
            .members
            .iter()
            .map(|(c, k)| format!("{}x{k}", c.pretty()))
            .collect();
        println!("{:>5}  width {:>3}  from {}", class.representative.pretty(), class.width, members.join(" "));
    }
    println!("total width {}", table.total_width());
    Ok(())
}
