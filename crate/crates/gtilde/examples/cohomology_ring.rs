//! Arithmetic in the cohomology ring: every class is kept as the normal
//! form of a representative, so equality and vanishing are decidable.

use gtilde::grassmann::{CohRing, TowerConfig};
use gtilde::Error;

fn main() -> Result<(), Error> {
    let cfg = TowerConfig::new(3)?;
    let ring = CohRing::new(cfg);

    // relations kick in as soon as a product leaves the basis
    let w2 = ring.parse("w2")?;
    let mut power = ring.parse("1")?;
    for e in 1..=5 {
        power = ring.mul(&power, &w2)?;
        println!("w2^{e} = {power}");
    }

    // the exotic generator squares to zero...
    let a = ring.parse("a")?;
    println!("a * a = {}", ring.mul(&a, &a)?);

    // ...and pairs with the top ordinary class to the fundamental class
    let top = ring.parse("w2*w3^2")?;
    let fundamental = ring.mul(&a, &top)?;
    println!(
        "a * w2*w3^2 = {fundamental} (degree {})",
        cfg.manifold_dim()
    );

    // the height of w3 is 2^(t-1) - 2: the next power dies
    let w3 = ring.parse("w3")?;
    let mut h = ring.parse("1")?;
    for _ in 0..(cfg.n() / 2 - 2) {
        h = ring.mul(&h, &w3)?;
    }
    println!("w3^{} = {h}", cfg.n() / 2 - 2);
    println!("w3^{} = {}", cfg.n() / 2 - 1, ring.mul(&h, &w3)?);
    Ok(())
}
