//! The two polynomial families everything else is built from: the dual
//! classes g_r and the basis members f_i they generate.

use gtilde::grassmann::{f_poly, g_poly, lm_f_closed_form, wbar, TowerConfig};
use gtilde::Error;

fn main() -> Result<(), Error> {
    println!("g_r for small r:");
    for r in 0..=9 {
        println!("  g_{r} = {}", g_poly(r));
    }

    // g_r is the rank-3 dual class with every w1-carrying monomial deleted
    let r = 12;
    println!("\nwbar_{r} in 3 variables = {}", wbar(r, 3)?);
    println!("g_{r}                   = {}", g_poly(r));

    for t in [3, 4] {
        let cfg = TowerConfig::new(t)?;
        println!("\nbasis members at t = {t}:");
        for i in 0..t {
            let f = f_poly(cfg, i)?;
            println!("  f_{i} = {f}");
            assert_eq!(f.leading_monomial(), Some(&lm_f_closed_form(cfg, i)?));
        }
    }

    // the family ends on a pure power of w3, whatever the tower
    let cfg = TowerConfig::new(7)?;
    println!("\nf_6 at t = 7 is {}", f_poly(cfg, 6)?);
    Ok(())
}
