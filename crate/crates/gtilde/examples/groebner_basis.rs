//! Completing the defining ideal to its reduced Groebner basis from
//! scratch, then using it to decide ideal membership.

use gtilde::gf2::Polynomial;
use gtilde::grassmann::{claimed_gb, g_poly, TowerConfig};
use gtilde::groebner::{buchberger, reduce, reduce_gb, BasisSet, Budget};
use gtilde::Error;

fn main() -> Result<(), Error> {
    let cfg = TowerConfig::new(4)?;
    let n = cfg.n();

    // the ideal is generated by two consecutive dual classes
    let generators = BasisSet::new(vec![g_poly(n - 2), g_poly(n - 1)])?;
    println!("generators of the ideal at t = 4:");
    for p in generators.polys() {
        println!("  {p}");
    }

    let completed = reduce_gb(&buchberger(&generators, Budget::default())?)?;
    println!("\nreduced Groebner basis, computed by completion:");
    for p in completed.polys() {
        println!("  {p}");
    }
    assert_eq!(completed.polys(), claimed_gb(cfg).polys());
    println!("matches the closed-form family f_0..f_3");

    // normal forms decide membership: zero iff the element is in the ideal
    let inside = Polynomial::parse("w2^8 + w2^5*w3^2 + w2^2*w3^4")?; // w2 * f_0
    let outside = Polynomial::parse("w2^8")?;
    println!("\nNF({inside}) = {}", reduce(&inside, &completed));
    println!("NF({outside}) = {}", reduce(&outside, &completed));
    Ok(())
}
