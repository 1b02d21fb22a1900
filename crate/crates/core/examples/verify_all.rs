//! Runs every reproducible claim and prints one line per claim.

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2024);
    for r in chevalley::verify::run_all(seed) {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {:>2}. {:<40} {:>6} ms  {}", r.id, r.title, r.millis, r.witness.as_deref().unwrap_or(&r.detail));
    }
}
