//! Waste, density, and the injection into the next mosaic size.

use torus_mosaic::enumerate::enumerate_parallel;

fn main() {
    for n in 1..=2 {
        let ms = enumerate_parallel(n);
        let dense = ms.iter().filter(|m| m.is_dense()).count();
        let (mut lo, mut hi) = (usize::MAX, 0);
        for m in &ms {
            let gain = m.embed().waste().as_f64() - m.waste().as_f64();
            lo = lo.min(gain as usize);
            hi = hi.max(gain as usize);
        }
        println!("n = {n}: {} mosaics, {dense} dense, embedding adds {lo}..={hi} waste", ms.len());
    }

    let m: torus_mosaic::Mosaic = "1 2\n4 3\n".parse().unwrap();
    println!("\n{m}waste {} ->\n\n{}waste {}", m.waste(), m.embed(), m.embed().waste());
}
