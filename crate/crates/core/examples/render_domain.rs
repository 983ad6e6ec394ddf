//! Draws a fundamental domain as SVG and writes the triangle data as JSON.
//!
//!     cargo run --example render_domain -- 30 gamma0

use fundom::cosets::Subgroup;
use fundom::domain::{render_json, render_svg, SvgOptions};
use fundom::Level;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: i64 = args.next().map_or(Ok(30), |s| s.parse())?;
    let group: Subgroup = args.next().map_or(Ok(Subgroup::Gamma0), |s| s.parse())?;

    let list = group.build(Level::new(n)?).verified()?;
    let options = SvgOptions {
        labels: list.len() <= 24,
        ..SvgOptions::default()
    };
    let stem = format!("{group}_{n}");
    std::fs::write(format!("{stem}.svg"), render_svg(&list, &options))?;
    std::fs::write(format!("{stem}.json"), render_json(&list)?)?;
    println!("wrote {stem}.svg and {stem}.json ({} triangles)", list.len());
    Ok(())
}
