mod common;

use std::io::{self, Cursor, Read};

use hypocubic::codec::{
    encode_record, read_planar_code, read_text_adjacency, to_text, write_planar_code, ReadOptions, HEADER,
};
use hypocubic::invariants::faces;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{data_path, random_connected_subcubic, random_plane_embedding};

fn roundtrip_bytes(bytes: &[u8]) -> Vec<u8> {
    let graphs: Vec<_> = read_planar_code(Cursor::new(bytes), ReadOptions::default())
        .map(|r| r.expect("valid record").into_graph())
        .collect();
    let mut out = Vec::new();
    write_planar_code(&graphs, &mut out, true).unwrap();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_embeddings_roundtrip(seed in any::<u64>(), steps in 1usize..120) {
        let mut rng = StdRng::seed_from_u64(seed);
        let e = random_plane_embedding(&mut rng, steps);
        let mut bytes = Vec::new();
        write_planar_code([e.graph()], &mut bytes, true).unwrap();
        prop_assert_eq!(roundtrip_bytes(&bytes), bytes.clone());
        let back = read_planar_code(Cursor::new(&bytes), ReadOptions::default()).next().unwrap().unwrap();
        prop_assert_eq!(back.graph(), e.graph());
        prop_assert!(faces(&back).check_identities(back.graph()).is_ok());
    }

    #[test]
    fn text_roundtrip(seed in any::<u64>(), n in 1usize..40) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_connected_subcubic(&mut rng, n);
        let text = to_text(&g);
        let back = read_text_adjacency(Cursor::new(text.as_bytes())).next().unwrap().unwrap();
        prop_assert_eq!(to_text(&back), text);
        prop_assert_eq!(back.edges(), g.edges());
    }
}

#[test]
fn plantri_corpus_roundtrips_and_satisfies_identities() {
    let bytes = std::fs::read(data_path("planar_cubic_3conn_4_to_12.pc")).unwrap();
    assert_eq!(roundtrip_bytes(&bytes), bytes);
    let mut count = 0;
    for e in read_planar_code(
        Cursor::new(&bytes),
        ReadOptions {
            cubic_only: true,
            ..Default::default()
        },
    ) {
        let e = e.unwrap();
        faces(&e).check_identities(e.graph()).unwrap();
        count += 1;
    }
    assert_eq!(count, 23);
}

/// Yields K4 records forever after the header.
struct EndlessK4 {
    pos: usize,
    record: Vec<u8>,
}

impl Read for EndlessK4 {
    fn read(&mut self, buf: &mut [u8]) -> io::Result<usize> {
        let stream_byte = |i: usize| {
            if i < HEADER.len() {
                HEADER[i]
            } else {
                self.record[(i - HEADER.len()) % self.record.len()]
            }
        };
        for (k, b) in buf.iter_mut().enumerate() {
            *b = stream_byte(self.pos + k);
        }
        self.pos += buf.len();
        Ok(buf.len())
    }
}

#[test]
fn reader_streams_without_reading_ahead() {
    let mut record = Vec::new();
    encode_record(hypocubic::fixtures::k4().graph(), &mut record).unwrap();
    let reader = read_planar_code(EndlessK4 { pos: 0, record }, ReadOptions::default());
    // an unbounded source terminates only if records are decoded lazily
    assert_eq!(reader.take(100_000).filter(|r| r.is_ok()).count(), 100_000);
}
