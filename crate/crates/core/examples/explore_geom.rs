use crosslen_core::hyperbolic::*;
use crosslen_core::*;

fn main() {
    let pres = SurfacePresentation::new(2);
    let rep = octagon_rep(2).unwrap();
    println!("initial systole estimate (generators): {}", rep.systole_estimate);

    let t = std::time::Instant::now();
    let ball = enumerate_ball(&pres, 5, EnumLimits::default()).unwrap();
    println!("ball(5): {} elements in {:?}", ball.len(), t.elapsed());

    let sys = systole_lowerbound(&rep, &ball);
    println!("systole over ball(5): {sys}");

    let ctx = estimate_context(&rep, &ball);
    println!("context: {ctx:#?}");

    // matrix separation: distinct elements should have far-apart matrices
    let mut min_sep = f64::INFINITY;
    let n = ball.ball_count(4) as u32;
    let mats: Vec<Isometry> = (0..n).map(|id| rep.evaluate(&ball.word_of(id))).collect();
    for i in 0..n as usize {
        for j in (i + 1)..n as usize {
            let d = mats[i].distance_to(&mats[j]);
            if d < min_sep {
                min_sep = d;
            }
        }
    }
    println!("min matrix separation among {} elements of ball(4): {min_sep:.6e}", n);

    // homomorphism sanity: canonical form evaluates to the same matrix
    let mut max_err = 0.0f64;
    for seed in 0..200 {
        let w = random_word(2, 10, seed);
        let c = pres.canonical(&w);
        let d = rep.evaluate(&w).distance_to(&rep.evaluate(&c));
        max_err = max_err.max(d);
    }
    println!("max |rho(w) - rho(nf(w))| over 200 len-10 words: {max_err:.3e}");
}
