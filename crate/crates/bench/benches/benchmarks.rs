use criterion::{black_box, criterion_group, criterion_main, Criterion};

use classmult::family::{build_family, Branch};
use classmult::numbers::totient_bound_check;
use classmult::oracle::{
    close_group, conjugacy_classes, psl2_group, symmetric_generators, DEFAULT_CAP,
};
use classmult::partition::enumerate_partitions;
use classmult::sym_alt::{multiplicity_report, GroupTag};

fn bench_partitions(c: &mut Criterion) {
    c.bench_function("enumerate_partitions_40", |b| {
        b.iter(|| enumerate_partitions(black_box(40)).count())
    });
    c.bench_function("centralizers_over_partitions_30", |b| {
        b.iter(|| {
            enumerate_partitions(black_box(30))
                .map(|p| p.centralizer_order())
                .collect::<Vec<_>>()
        })
    });
}

fn bench_reports(c: &mut Criterion) {
    c.bench_function("multiplicity_report_sym_30", |b| {
        b.iter(|| multiplicity_report(&GroupTag::Sym(black_box(30))).unwrap())
    });
    c.bench_function("multiplicity_report_alt_38", |b| {
        b.iter(|| multiplicity_report(&GroupTag::Alt(black_box(38))).unwrap())
    });
}

fn bench_family(c: &mut Criterion) {
    c.bench_function("build_family_k5_p_prime", |b| {
        b.iter(|| build_family(black_box(5), Branch::PPrime).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    c.bench_function("close_s6", |b| {
        let gens = symmetric_generators(6);
        b.iter(|| close_group(&gens, 6, DEFAULT_CAP).unwrap())
    });
    c.bench_function("classes_psl2_13", |b| {
        let g = psl2_group(13, DEFAULT_CAP).unwrap();
        b.iter(|| conjugacy_classes(&g))
    });
    c.bench_function("totient_bound_check_100k", |b| {
        b.iter(|| totient_bound_check(black_box(100_000)))
    });
}

criterion_group!(benches, bench_partitions, bench_reports, bench_family, bench_oracle);
criterion_main!(benches);
