use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rmf_bench::enumeration_inputs;
use rmf_core::{canonical_key, enum_nonsep, enum_sep, enumerate_strata, EnumOptions, Variant};

fn enumeration(c: &mut Criterion) {
    let opts = EnumOptions::default().no_shortcircuit();
    let mut group = c.benchmark_group("enumerate");
    for t in enumeration_inputs() {
        if !t.exists().exists {
            continue;
        }
        group.bench_with_input(BenchmarkId::from_parameter(&t), &t, |b, t| {
            b.iter(|| match t.variant() {
                Variant::NonSep => enum_nonsep(t, &opts).map(|g| g.len()),
                _ => enum_sep(t, &opts).map(|g| g.len()),
            })
        });
    }
    group.finish();
}

fn canonical_keys(c: &mut Criterion) {
    let t = "3,6,0|1,1".parse().unwrap();
    let graphs = enum_nonsep(&t, &EnumOptions::default()).unwrap();
    c.bench_function("canonical_key/3,6,0|1,1", |b| {
        b.iter(|| graphs.iter().map(canonical_key).count())
    });
}

fn strata(c: &mut Criterion) {
    c.bench_function("enumerate_strata/20", |b| {
        b.iter(|| enumerate_strata(20).len())
    });
}

criterion_group!(benches, enumeration, canonical_keys, strata);
criterion_main!(benches);
