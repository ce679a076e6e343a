use matchcov::census::wiwj::*;
use std::time::Instant;

fn main() {
    let t1 = Instant::now();
    let verdict = wiwj_census(&WiWjBounds { max_wheel: 7, max_free_doubles: 2 });
    println!("full census: insts={} bricks={} inapp={} wl={} viol={} in {:?}", verdict.instances, verdict.distinct_bricks, verdict.inapplicable_graphs, verdict.wheel_like_bricks, verdict.violations.len(), t1.elapsed());
    for v in verdict.violations.iter().take(5) { println!("{:?}", v); }
}
