//! Steenrod squares: closed forms on the ordinary subalgebra, checked
//! against a Cartan-recursion oracle, and the partially defined action on
//! the full cohomology.

use gtilde::gf2::Polynomial;
use gtilde::grassmann::{CohRing, TowerConfig};
use gtilde::steenrod::{sq1, sq2, sq_cartan_oracle, sq_on_coh};
use gtilde::Error;

fn main() -> Result<(), Error> {
    for text in ["w2", "w3", "w2*w3", "w2^3*w3", "w2^2*w3^4"] {
        let p = Polynomial::parse(text)?;
        let (s1, s2) = (sq1(&p), sq2(&p));
        let left = format!("Sq^1({text}) = {s1}");
        println!("{left:<28} Sq^2({text}) = {s2}");
        // the closed forms agree with peeling generators one at a time
        assert_eq!(s1, sq_cartan_oracle(1, &p)?);
        assert_eq!(s2, sq_cartan_oracle(2, &p)?);
    }

    let ring = CohRing::new(TowerConfig::new(3)?);

    // on the quotient the result is reduced to normal form
    let x = ring.parse("a*w2*w3^2")?;
    println!(
        "\nin the t = 3 ring: Sq^1(a*w2*w3^2) = {}",
        sq_on_coh(&ring, 1, &x)?
    );

    // squares of the exotic generator are not pinned down by the
    // presentation; the operation refuses when their contribution could
    // survive instead of guessing
    let a = ring.parse("a")?;
    match sq_on_coh(&ring, 2, &a) {
        Err(Error::Indeterminate(reason)) => println!("Sq^2(a) refused: {reason}"),
        other => panic!("expected a refusal, got {other:?}"),
    }
    Ok(())
}
