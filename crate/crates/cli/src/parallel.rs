use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use stripcomb_core::report::ConjectureReport;
use stripcomb_core::suite::Task;

fn timed(task: &Task) -> Vec<ConjectureReport> {
    let start = Instant::now();
    let mut reports = task.run();
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut reports {
        r.wall_ms = Some(ms);
    }
    reports
}

/// Run every task on up to `jobs` threads. Output order is task order.
pub fn run_tasks(tasks: &[Task], jobs: usize) -> Vec<ConjectureReport> {
    let jobs = jobs.clamp(1, tasks.len().max(1));
    if jobs == 1 {
        return tasks.iter().flat_map(timed).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Vec<ConjectureReport>>>> = Mutex::new(vec![None; tasks.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(task) = tasks.get(i) else { break };
                let out = timed(task);
                slots.lock().expect("no worker panicked")[i] = Some(out);
            });
        }
    });
    slots.into_inner().expect("no worker panicked").into_iter().flat_map(|r| r.expect("every task ran")).collect()
}
