use qmeas::factory::{oscillator_ground_probe, truncated_oscillator};
use qmeas::measure::von_neumann_model;
use qmeas::relations::{fujikawa_check, naive_product_check, ozawa_check};

fn main() {
    let hbar = 1.0;
    let sys_pair = truncated_oscillator(16, hbar).unwrap();
    let ground = oscillator_ground_probe(16, hbar).unwrap();
    let probe_pair = truncated_oscillator(128, hbar).unwrap();
    let zeta = oscillator_ground_probe(128, hbar).unwrap();
    let t = std::time::Instant::now();
    for i in 0..10 {
        let g = 0.25 + i as f64 * (4.0 - 0.25) / 9.0;
        let model = von_neumann_model(&sys_pair.q, &probe_pair, &zeta, g).unwrap();
        let r = model.noise_report(&sys_pair.p, &ground).unwrap();
        let o = ozawa_check(&model, &sys_pair.p, &ground, 1e-6).unwrap();
        let f = fujikawa_check(&model, &sys_pair.p, &ground, 1e-6).unwrap();
        let n = naive_product_check(&model, &sys_pair.p, &ground, 1e-6).unwrap();
        println!(
            "g={g:.3}: eps*eta={:.6} dev={:.3e} | ozawa margin {:+.4e} sat={} | fuji margin {:+.4e} | naive margin {:+.4e} sat={}",
            r.epsilon * r.eta,
            (r.epsilon * r.eta - 0.5).abs(),
            o.margin, o.satisfied, f.margin, n.margin, n.satisfied,
        );
    }
    println!("total {:?}", t.elapsed());
}
