use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use twin_bench::{random_pure_words, random_words};
use twin_core::free_aut::{express_pure, faithfulness_search};
use twin_core::schreier::subgroup_presentation;
use twin_core::surface::{build_complex, surface_invariants};
use twin_core::tietze::tietze_simplify;
use twin_core::word::normal_form;
use twin_core::GroupSpec;

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for len in [16, 64, 256] {
        let spec = GroupSpec::new(8).unwrap();
        let words = random_words(8, len, 64, 7);
        group.bench_with_input(BenchmarkId::from_parameter(len), &words, |b, words| {
            b.iter(|| words.iter().map(|w| normal_form(black_box(w), &spec).unwrap().len()).sum::<usize>())
        });
    }
    group.finish();
}

fn presentations(c: &mut Criterion) {
    c.bench_function("schreier_pt4_simplified", |b| {
        b.iter(|| tietze_simplify(&subgroup_presentation(black_box(4)).unwrap()))
    });
    c.bench_function("schreier_pt5_raw", |b| b.iter(|| subgroup_presentation(black_box(5)).unwrap()));
}

fn phi4(c: &mut Criterion) {
    let words = random_pure_words(8, 64, 11);
    express_pure(&words[0]).unwrap();
    c.bench_function("express_pure", |b| {
        b.iter(|| words.iter().map(|w| express_pure(black_box(w)).unwrap().len()).sum::<usize>())
    });
    c.bench_function("faithfulness_search_6", |b| b.iter(|| faithfulness_search(black_box(6)).unwrap()));
}

fn surface(c: &mut Criterion) {
    c.bench_function("surface_invariants", |b| {
        b.iter(|| {
            let complex = build_complex();
            surface_invariants(&complex.triangles, &complex.pairing).unwrap()
        })
    });
}

criterion_group!(benches, normal_forms, presentations, phi4, surface);
criterion_main!(benches);
