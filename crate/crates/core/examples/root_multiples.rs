//! Which roots are l-fold multiples (l ≥ 2) of weights, over every simple
//! type of rank at most 8.

use chevalley::rootsys::{all_types_up_to, build_root_system, format_qvec};

fn main() -> chevalley::Result<()> {
    for (kind, rank) in all_types_up_to(8) {
        let rs = build_root_system(kind, rank)?;
        let hits = rs.scan_root_multiples_of_weights();
        if hits.is_empty() {
            continue;
        }
        println!("{}: {} of {} roots", rs.label(), hits.len(), rs.num_roots());
        for h in hits.iter().take(4) {
            println!("  {} = {} * {}", format_qvec(&h.root), h.l, format_qvec(&h.weight));
        }
    }
    Ok(())
}
