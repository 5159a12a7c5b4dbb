//! Counting t-cores by generating function and by enumeration.

use grassmann_hodge::enumeration::{core_count_series, han_predicts_no_3core, Enumerator};
use grassmann_hodge::Rectangle;

fn main() -> grassmann_hodge::Result<()> {
    let en = Enumerator::default();
    for t in 2..=5 {
        let series = core_count_series(t, 20)?;
        let counted = en.count_tcores_up_to(t, 20)?;
        assert_eq!(series.coeffs, counted);
        println!("c_{t}: {:?}", series.coeffs);
    }
    let zeros: Vec<u64> = (0..60).filter(|&m| han_predicts_no_3core(m)).collect();
    println!("sizes with no 3-core below 60: {zeros:?}");
    for core in en.tcores_up_to(3, 8)? {
        println!("  3-core {core}");
    }

    println!("largest t-core in the k x (n-k) box, n = 10:");
    for t in 2..=6 {
        let sizes: Vec<usize> = (1..10)
            .map(|k| {
                let rect = Rectangle::grassmannian(k, 10)?;
                Ok(en.tcores_bounded(rect, t)?.map(|p| p.size()).max().unwrap_or(0))
            })
            .collect::<grassmann_hodge::Result<_>>()?;
        println!("  t={t}: {sizes:?}");
    }
    Ok(())
}
