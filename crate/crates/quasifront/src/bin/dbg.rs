use quasifront::analysis::{delta_table, AmplitudeMode, Family};

fn main() {
    let fams = [
        (Family::Bessel, vec![2u32, 6, 10, 20], vec![4.7, 2.7, 2.1, 1.4]),
        (Family::BesselPrime, vec![2, 6, 10, 20], vec![7.4, 5.2, 4.1, 2.7]),
        (Family::Lommel, vec![6, 10, 20, 40], vec![9.7, 7.4, 5.0, 3.4]),
        (Family::LommelPrime, vec![6, 10, 20, 40], vec![6.2, 5.1, 3.6, 1.8]),
    ];
    for mode in [AmplitudeMode::RawGrid, AmplitudeMode::Interpolated] {
        println!("==== mode {mode:?}");
        for (fam, orders, paper) in &fams {
            print!("{:<14}", format!("{fam:?}"));
            let rows = delta_table(*fam, orders, 0.1, mode);
            for (row, p) in rows.iter().zip(paper.iter()) {
                let r = row.as_ref().unwrap();
                let ok = ((r.delta_pct.abs() - p).abs() <= 0.5) as u8;
                print!("  n={:2}: {:+.3} (paper {p}, |d|-diff {:+.2}, ok={ok})", r.n, r.delta_pct, r.delta_pct.abs() - p);
            }
            println!();
        }
    }
}
