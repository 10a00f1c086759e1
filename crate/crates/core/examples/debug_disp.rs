use crosslen_core::hyperbolic::*;
use crosslen_core::*;

fn main() {
    let pres = SurfacePresentation::new(2);
    let rep = octagon_rep(2).unwrap();
    for l in Letter::alphabet(2) {
        let w = Word::single(l);
        println!(
            "letter {l}: displacement {:.6}, translation length {:.6}",
            rep.displacement(&w),
            rep.evaluate(&w).translation_length(1e-9).unwrap()
        );
    }
    let ball = enumerate_ball(&pres, 4, EnumLimits::default()).unwrap();
    let mut worst = (0.0f64, Word::empty());
    for id in 1..ball.len() as u32 {
        let w = ball.word_of(id);
        let slope = rep.displacement(&w) / ball.length_of(id) as f64;
        if slope > worst.0 {
            worst = (slope, w);
        }
    }
    println!("worst slope {:.4} at {:?} (len {})", worst.0, worst.1, worst.1.len());
    let w = &worst.1;
    println!("  displacement {:.4}", rep.displacement(w));
    let mut acc = 0.0;
    for &l in w.letters() {
        acc += rep.displacement(&Word::single(l));
    }
    println!("  sum of letter displacements {acc:.4}");
}
