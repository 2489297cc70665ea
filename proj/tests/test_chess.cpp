#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "gridbench/chess.hpp"

#include "chess_oracle.hpp"
#include "support.hpp"

using namespace gridbench;
using namespace gridbench::chess;

namespace {

// translate a main-engine move into the oracle's 0x88 indexing
chess_oracle::OMove to_oracle(const Move& m, bool white) {
    auto conv = [](int sq) {
        const int row = sq / 8, col = sq % 8;  // row 0 = rank 8
        return (7 - row) * 16 + col;
    };
    int promo = 0;
    if (m.promo != 0) {
        switch (m.promo) {
            case kKnight: promo = white ? chess_oracle::WN : chess_oracle::BN; break;
            case kBishop: promo = white ? chess_oracle::WB : chess_oracle::BB; break;
            case kRook: promo = white ? chess_oracle::WR : chess_oracle::BR; break;
            case kQueen: promo = white ? chess_oracle::WQ : chess_oracle::BQ; break;
        }
    }
    return {conv(m.from), conv(m.to), promo};
}

std::set<std::tuple<int, int, int>> move_set_main(const Position& p) {
    std::set<std::tuple<int, int, int>> out;
    for (const Move& m : legal_moves(p)) {
        const auto om = to_oracle(m, p.side == Side::White);
        out.insert({om.from, om.to, om.promo});
    }
    return out;
}

std::set<std::tuple<int, int, int>> move_set_oracle(const chess_oracle::State& st) {
    std::set<std::tuple<int, int, int>> out;
    for (const auto& m : chess_oracle::moves(st)) out.insert({m.from, m.to, m.promo});
    return out;
}

int sq(const char* name) {  // "e4" -> main-engine square index
    return ('8' - name[1]) * 8 + (name[0] - 'a');
}

}  // namespace

TEST_CASE("perft from the initial position matches the reference counts") {
    const Position start = initial_position();
    CHECK(perft(start, 1) == 20);
    CHECK(perft(start, 2) == 400);
    CHECK(perft(start, 3) == 8902);

    // independent oracle agrees
    const auto st = chess_oracle::from_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1");
    CHECK(chess_oracle::perft(st, 1) == 20);
    CHECK(chess_oracle::perft(st, 2) == 400);
    CHECK(chess_oracle::perft(st, 3) == 8902);
}

TEST_CASE("move sets match the independent generator along random playouts") {
    Rng rng(271828);
    for (int game = 0; game < 20; ++game) {
        Position p = initial_position();
        chess_oracle::State st =
            chess_oracle::from_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1");
        for (int ply = 0; ply < 40; ++ply) {
            const auto main_set = move_set_main(p);
            const auto oracle_set = move_set_oracle(st);
            REQUIRE(main_set == oracle_set);
            auto moves = legal_moves(p);
            if (moves.empty()) break;
            const Move& m = moves[rng.below(moves.size())];
            const auto om = to_oracle(m, p.side == Side::White);
            p = apply_move(p, m);
            st = chess_oracle::play(st, om);
        }
    }
}

TEST_CASE("perft on positions with castling and en passant in play") {
    // standard verification position rich in castling/ep interactions
    const char* fen = "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1";
    const Position p = position_from_fen(fen);
    const auto st = chess_oracle::from_fen(fen);
    for (int d = 1; d <= 2; ++d) CHECK(perft(p, d) == chess_oracle::perft(st, d));
    CHECK(perft(p, 1) == 48);
    CHECK(perft(p, 2) == 2039);
}

TEST_CASE("FEN roundtrip") {
    const char* fens[] = {
        "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq -",
        "r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq -",
        "8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - -",
        "4k3/8/8/8/8/8/8/4K2R w K -",
    };
    for (const char* fen : fens) {
        const Position p = position_from_fen(fen);
        CHECK(fen_from_position(p) == fen);
    }
    CHECK_THROWS_AS(position_from_fen("only/one/field"), ParseError);
    CHECK_THROWS_AS(position_from_fen("9/8/8/8/8/8/8/8 w - -"), ParseError);
}

TEST_CASE("grid encoding roundtrips and flags bad boards") {
    const Position start = initial_position();
    Grid g = grid_from_position(start);
    CHECK(g.at(0, 0) == 10);  // black rook
    CHECK(g.at(7, 4) == 6);   // white king
    CHECK(g.at(6, 0) == 1);   // white pawn
    const Position back = position_from_grid(g);
    CHECK(back.board == start.board);
    CHECK(back.castling == 0);  // grids carry no castling rights

    Grid no_kings(8, 8);
    CHECK_THROWS_AS(check_position_legal(position_from_grid(no_kings)), IllegalPosition);
}

TEST_CASE("side-to-move contract for instances") {
    // two bare kings, black to move: rejected by the white-to-move contract
    Position p = position_from_fen("k7/8/8/8/8/8/8/K7 b - -");
    CHECK_NOTHROW(check_position_legal(p));
    CHECK_THROWS_AS(check_position_legal(p, /*require_white_to_move=*/true), IllegalPosition);
}

TEST_CASE("the bundled example move is mate") {
    Grid input = load_fixture_grid("chess_input");
    Grid output = load_fixture_grid("chess_output");
    const Position p = position_from_grid(input);
    check_position_legal(p, /*require_white_to_move=*/true);

    // queen to f7
    const Move mate{sq("b3"), sq("f7"), 0};
    CHECK(verify_mate_in_1(p, mate));

    const auto mates = find_mate_moves(p);
    REQUIRE(mates.size() == 1);
    CHECK(mates.front() == mate);

    const ChessInstance inst{input, mate};
    auto [in_grid, out_grid] = encode_chess_pair(inst);
    CHECK(in_grid == input);
    CHECK(out_grid == output);
}

TEST_CASE("stalemate is not mate") {
    // queen to c7 stalemates the cornered king: no replies but no check
    const Position p = position_from_fen("k7/8/2Q5/8/8/8/8/4K3 w - -");
    const Move stalemating{sq("c6"), sq("c7"), 0};
    CHECK_FALSE(verify_mate_in_1(p, stalemating));
    // retreating the queen leaves the king mobile; also not mate
    const Move quiet{sq("c6"), sq("c1"), 0};
    CHECK_FALSE(verify_mate_in_1(p, quiet));
}

TEST_CASE("no first move mates from the starting position") {
    const Position start = initial_position();
    for (const Move& m : legal_moves(start)) CHECK_FALSE(verify_mate_in_1(start, m));
    CHECK(find_mate_moves(start).empty());
}

TEST_CASE("illegal move inputs are rejected") {
    const Position start = initial_position();
    CHECK_THROWS_AS(verify_mate_in_1(start, Move{sq("e2"), sq("e5"), 0}), IllegalMove);
}

TEST_CASE("instances come from FEN ingestion") {
    // back-rank mate available: Ra8#
    auto inst = instance_from_fen("6k1/5ppp/8/8/8/8/5PPP/R5K1 w - - 0 1");
    REQUIRE(inst.has_value());
    CHECK(inst->mate_move == Move{sq("a1"), sq("a8"), 0});

    // no mate available
    CHECK_FALSE(instance_from_fen("6k1/5ppp/8/8/8/8/5PPP/6K1 w - - 0 1").has_value());

    // black to move violates the contract
    CHECK_THROWS_AS(instance_from_fen("6k1/5ppp/8/8/8/8/5PPP/R5K1 b - - 0 1"),
                    IllegalPosition);
}
