//! Enumerating the monomial basis of the cohomology, degree by degree, and
//! reading off the Betti numbers.

use gtilde::grassmann::{additive_basis, betti_table, TowerConfig};
use gtilde::Error;

fn main() -> Result<(), Error> {
    let cfg = TowerConfig::new(3)?;
    let basis = additive_basis(cfg)?;
    println!(
        "t = 3: manifold dimension {}, {} basis monomials",
        cfg.manifold_dim(),
        basis.total()
    );
    for (degree, monomials) in basis.degrees().iter().enumerate() {
        if monomials.is_empty() {
            continue;
        }
        let names: Vec<String> = monomials.iter().map(|m| m.to_string()).collect();
        println!("  H^{degree}: {}", names.join(", "));
    }

    // the dimension table is computed by interval arithmetic, without
    // enumerating anything, and is symmetric around the middle degree
    let table = betti_table(TowerConfig::new(5)?);
    println!("\nt = 5 Betti numbers: {:?}", table.dims());
    assert!(table.is_symmetric());
    assert_eq!(table.total(), TowerConfig::new(5)?.basis_size());
    println!("symmetric, total {}", table.total());
    Ok(())
}
