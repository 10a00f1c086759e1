use crosslen_core::*;
fn main() {
    let pres = SurfacePresentation::new(2);
    let t = std::time::Instant::now();
    let b = enumerate_ball(&pres, 7, EnumLimits::default()).unwrap();
    println!("radius 7: {} elements in {:?}", b.len(), t.elapsed());
    for r in 0..=7 { println!("  ball({r}) = {}", b.ball_count(r)); }
}
