//! Closed-form vanishing criteria.

use grassmann_hodge::classifiers::{
    classify_extremal_n, extremal_n_minus_1_witness, i_form_excluded, j_form_excluded,
    necessary_battery, t3_nonvanishing,
};
use grassmann_hodge::enumeration::KnijtQuery;

fn main() -> grassmann_hodge::Result<()> {
    let q = KnijtQuery::new(5, 10, 3, 5, 4)?;
    println!("battery for {q:?}:");
    for v in necessary_battery(&q) {
        println!(
            "  {:<40} {}",
            v.name,
            if v.holds { "holds" } else { "FAILS" }
        );
    }

    for (k, n, i, j) in [(8, 12, 12, 20), (4, 8, 2, 6), (5, 10, 4, 9)] {
        let (nonzero, cert) = t3_nonvanishing(k, n, i, j)?;
        println!("t=3 Gr({k},{n}) i={i} j={j}: {nonzero}  {cert:?}");
    }

    for t in [3, 6, 12] {
        println!(
            "Gr(8,12), t={t}, i+j=N: {:?}",
            classify_extremal_n(8, 12, t)?
        );
    }
    if let Some(w) = extremal_n_minus_1_witness(9, 11) {
        println!("Gr(9,11), i+j=N-1 witness {w}");
    }

    let js: Vec<u64> = (0..40).filter(|&j| j_form_excluded(j)).collect();
    let is: Vec<u64> = (0..40).filter(|&i| i_form_excluded(i)).collect();
    println!("Ω^j(3) acyclic on every Gr(k,n) for j in {js:?}");
    println!("H^i(Ω^j(3)) = 0 on every Gr(k,n) for i in {is:?}");
    Ok(())
}
