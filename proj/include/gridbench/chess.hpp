#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"

namespace gridbench::chess {

// Piece codes: 1..6 = pawn, knight, bishop, rook, queen, king for white,
// negated for black, 0 empty. Squares are row*8+col with row 0 = rank 8 and
// col 0 = file a, matching the grid encoding.
inline constexpr int kPawn = 1, kKnight = 2, kBishop = 3, kRook = 4, kQueen = 5, kKing = 6;

enum class Side { White, Black };

inline Side other(Side s) { return s == Side::White ? Side::Black : Side::White; }

struct Move {
    int from = 0;
    int to = 0;
    int promo = 0;  ///< 0 or kKnight..kQueen
    bool is_castle = false;
    bool is_ep = false;

    friend bool operator==(const Move&, const Move&) = default;
};

// Castling right bits.
inline constexpr std::uint8_t kWhiteKingside = 1, kWhiteQueenside = 2, kBlackKingside = 4,
                              kBlackQueenside = 8;

struct Position {
    std::array<std::int8_t, 64> board{};
    Side side = Side::White;
    std::uint8_t castling = 0;
    int ep_square = -1;  ///< square a double push just passed over, or -1
};

namespace detail {

inline int row_of(int sq) { return sq >> 3; }
inline int col_of(int sq) { return sq & 7; }
inline int square(int row, int col) { return row * 8 + col; }
inline bool on_board(int row, int col) { return row >= 0 && row < 8 && col >= 0 && col < 8; }

inline constexpr int kKnightSteps[8][2] = {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                           {1, -2},  {1, 2},  {2, -1},  {2, 1}};
inline constexpr int kKingSteps[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                         {0, 1},   {1, -1}, {1, 0},  {1, 1}};
inline constexpr int kBishopDirs[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
inline constexpr int kRookDirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};

inline int king_square(const Position& p, Side s) {
    const int k = s == Side::White ? kKing : -kKing;
    for (int sq = 0; sq < 64; ++sq)
        if (p.board[sq] == k) return sq;
    return -1;
}

}  // namespace detail

/// Is `sq` attacked by any piece of side `by`?
inline bool square_attacked(const Position& p, int sq, Side by) {
    using namespace detail;
    const int r = row_of(sq), c = col_of(sq);
    const int sign = by == Side::White ? 1 : -1;

    // pawns: white attacks toward smaller rows
    const int pawn_row = r + sign;
    for (int dc : {-1, 1}) {
        if (on_board(pawn_row, c + dc) &&
            p.board[square(pawn_row, c + dc)] == sign * kPawn)
            return true;
    }
    for (const auto& s : kKnightSteps)
        if (on_board(r + s[0], c + s[1]) &&
            p.board[square(r + s[0], c + s[1])] == sign * kKnight)
            return true;
    for (const auto& s : kKingSteps)
        if (on_board(r + s[0], c + s[1]) &&
            p.board[square(r + s[0], c + s[1])] == sign * kKing)
            return true;
    for (const auto& d : kBishopDirs) {
        for (int rr = r + d[0], cc = c + d[1]; on_board(rr, cc); rr += d[0], cc += d[1]) {
            const int piece = p.board[square(rr, cc)];
            if (piece == 0) continue;
            if (piece == sign * kBishop || piece == sign * kQueen) return true;
            break;
        }
    }
    for (const auto& d : kRookDirs) {
        for (int rr = r + d[0], cc = c + d[1]; on_board(rr, cc); rr += d[0], cc += d[1]) {
            const int piece = p.board[square(rr, cc)];
            if (piece == 0) continue;
            if (piece == sign * kRook || piece == sign * kQueen) return true;
            break;
        }
    }
    return false;
}

inline bool in_check(const Position& p, Side s) {
    const int k = detail::king_square(p, s);
    return k >= 0 && square_attacked(p, k, other(s));
}

/// Apply a move without legality screening; castling rights, en passant
/// state and side to move are maintained.
inline Position apply_move(const Position& p, const Move& m) {
    using namespace detail;
    Position q = p;
    const int piece = q.board[m.from];
    q.ep_square = -1;

    if (m.is_ep) {
        q.board[square(row_of(m.from), col_of(m.to))] = 0;
    }
    q.board[m.to] = static_cast<std::int8_t>(
        m.promo != 0 ? (piece > 0 ? m.promo : -m.promo) : piece);
    q.board[m.from] = 0;

    if (m.is_castle) {
        const int row = row_of(m.from);
        if (col_of(m.to) == 6) {  // kingside: rook h -> f
            q.board[square(row, 5)] = q.board[square(row, 7)];
            q.board[square(row, 7)] = 0;
        } else {  // queenside: rook a -> d
            q.board[square(row, 3)] = q.board[square(row, 0)];
            q.board[square(row, 0)] = 0;
        }
    }
    if (piece == kPawn && row_of(m.from) == 6 && row_of(m.to) == 4)
        q.ep_square = square(5, col_of(m.from));
    if (piece == -kPawn && row_of(m.from) == 1 && row_of(m.to) == 3)
        q.ep_square = square(2, col_of(m.from));

    // rights lapse when the king or a rook moves, or a rook is captured
    auto clear_rights_at = [&](int sq) {
        switch (sq) {
            case 56: q.castling &= ~kWhiteQueenside; break;  // a1
            case 63: q.castling &= ~kWhiteKingside; break;   // h1
            case 0: q.castling &= ~kBlackQueenside; break;   // a8
            case 7: q.castling &= ~kBlackKingside; break;    // h8
            default: break;
        }
    };
    if (piece == kKing) q.castling &= ~(kWhiteKingside | kWhiteQueenside);
    if (piece == -kKing) q.castling &= ~(kBlackKingside | kBlackQueenside);
    clear_rights_at(m.from);
    clear_rights_at(m.to);

    q.side = other(p.side);
    return q;
}

/// Full legal move set for the side to move: castling, en passant and
/// promotions included; moves leaving the mover's king attacked excluded.
inline std::vector<Move> legal_moves(const Position& p) {
    using namespace detail;
    const int sign = p.side == Side::White ? 1 : -1;
    std::vector<Move> pseudo;
    pseudo.reserve(64);

    auto push = [&](int from, int to, int promo = 0, bool castle = false, bool ep = false) {
        pseudo.push_back(Move{from, to, promo, castle, ep});
    };
    auto push_pawn = [&](int from, int to) {
        const int to_row = row_of(to);
        if (to_row == 0 || to_row == 7) {
            for (int promo : {kQueen, kRook, kBishop, kKnight}) push(from, to, promo);
        } else {
            push(from, to);
        }
    };

    for (int from = 0; from < 64; ++from) {
        const int piece = p.board[from];
        if (piece == 0 || (piece > 0) != (sign > 0)) continue;
        const int r = row_of(from), c = col_of(from);
        const int type = piece * sign;

        if (type == kPawn) {
            const int fwd = -sign;  // white advances toward row 0
            if (on_board(r + fwd, c) && p.board[square(r + fwd, c)] == 0) {
                push_pawn(from, square(r + fwd, c));
                const int start_row = sign > 0 ? 6 : 1;
                if (r == start_row && p.board[square(r + 2 * fwd, c)] == 0)
                    push(from, square(r + 2 * fwd, c));
            }
            for (int dc : {-1, 1}) {
                if (!on_board(r + fwd, c + dc)) continue;
                const int to = square(r + fwd, c + dc);
                const int target = p.board[to];
                if (target != 0 && (target > 0) != (sign > 0)) push_pawn(from, to);
                if (to == p.ep_square) push(from, to, 0, false, true);
            }
        } else if (type == kKnight) {
            for (const auto& s : kKnightSteps) {
                if (!on_board(r + s[0], c + s[1])) continue;
                const int to = square(r + s[0], c + s[1]);
                if (p.board[to] == 0 || (p.board[to] > 0) != (sign > 0)) push(from, to);
            }
        } else if (type == kKing) {
            for (const auto& s : kKingSteps) {
                if (!on_board(r + s[0], c + s[1])) continue;
                const int to = square(r + s[0], c + s[1]);
                if (p.board[to] == 0 || (p.board[to] > 0) != (sign > 0)) push(from, to);
            }
            const int home_row = sign > 0 ? 7 : 0;
            if (from == square(home_row, 4) && !in_check(p, p.side)) {
                const std::uint8_t kside = sign > 0 ? kWhiteKingside : kBlackKingside;
                const std::uint8_t qside = sign > 0 ? kWhiteQueenside : kBlackQueenside;
                if ((p.castling & kside) && p.board[square(home_row, 5)] == 0 &&
                    p.board[square(home_row, 6)] == 0 &&
                    p.board[square(home_row, 7)] == sign * kRook &&
                    !square_attacked(p, square(home_row, 5), other(p.side)) &&
                    !square_attacked(p, square(home_row, 6), other(p.side)))
                    push(from, square(home_row, 6), 0, true);
                if ((p.castling & qside) && p.board[square(home_row, 3)] == 0 &&
                    p.board[square(home_row, 2)] == 0 && p.board[square(home_row, 1)] == 0 &&
                    p.board[square(home_row, 0)] == sign * kRook &&
                    !square_attacked(p, square(home_row, 3), other(p.side)) &&
                    !square_attacked(p, square(home_row, 2), other(p.side)))
                    push(from, square(home_row, 2), 0, true);
            }
        } else {
            auto slide = [&](const int dirs[4][2]) {
                for (int i = 0; i < 4; ++i) {
                    for (int rr = r + dirs[i][0], cc = c + dirs[i][1]; on_board(rr, cc);
                         rr += dirs[i][0], cc += dirs[i][1]) {
                        const int to = square(rr, cc);
                        if (p.board[to] == 0) {
                            push(from, to);
                            continue;
                        }
                        if ((p.board[to] > 0) != (sign > 0)) push(from, to);
                        break;
                    }
                }
            };
            if (type == kBishop || type == kQueen) slide(kBishopDirs);
            if (type == kRook || type == kQueen) slide(kRookDirs);
        }
    }

    std::vector<Move> legal;
    legal.reserve(pseudo.size());
    for (const Move& m : pseudo) {
        const Position q = apply_move(p, m);
        if (!in_check(q, p.side)) legal.push_back(m);
    }
    return legal;
}

inline std::uint64_t perft(const Position& p, int depth) {
    if (depth == 0) return 1;
    std::uint64_t nodes = 0;
    for (const Move& m : legal_moves(p)) {
        if (depth == 1)
            ++nodes;
        else
            nodes += perft(apply_move(p, m), depth - 1);
    }
    return nodes;
}

/// Structural and rule sanity: one king per side, pawns off the back
/// ranks, the side that just moved not left in check. With
/// `require_white_to_move` the instance contract (white moves) is enforced.
inline void check_position_legal(const Position& p, bool require_white_to_move = false) {
    int wk = 0, bk = 0;
    for (int sq = 0; sq < 64; ++sq) {
        const int piece = p.board[sq];
        if (piece == kKing) ++wk;
        if (piece == -kKing) ++bk;
        if ((piece == kPawn || piece == -kPawn) &&
            (detail::row_of(sq) == 0 || detail::row_of(sq) == 7))
            throw IllegalPosition("pawn on a back rank");
    }
    if (wk != 1 || bk != 1) throw IllegalPosition("each side needs exactly one king");
    if (require_white_to_move && p.side != Side::White)
        throw IllegalPosition("side to move must be white");
    if (in_check(p, other(p.side)))
        throw IllegalPosition("side not to move is in check");
}

/// True iff the move is legal and leaves the opponent in checkmate.
inline bool verify_mate_in_1(const Position& p, const Move& m) {
    const auto moves = legal_moves(p);
    bool found = false;
    for (const Move& lm : moves)
        if (lm == m) {
            found = true;
            break;
        }
    if (!found) throw IllegalMove("move is not legal in this position");
    const Position q = apply_move(p, m);
    return in_check(q, q.side) && legal_moves(q).empty();
}

/// Every legal move that delivers immediate checkmate, in generation order.
inline std::vector<Move> find_mate_moves(const Position& p) {
    std::vector<Move> mates;
    for (const Move& m : legal_moves(p)) {
        const Position q = apply_move(p, m);
        if (in_check(q, q.side) && legal_moves(q).empty()) mates.push_back(m);
    }
    return mates;
}

// ---- FEN ----

inline Position position_from_fen(const std::string& fen) {
    Position p;
    std::istringstream ss(fen);
    std::string board, side, castling, ep;
    if (!(ss >> board >> side >> castling >> ep))
        throw ParseError(0, "FEN needs at least four fields");

    int row = 0, col = 0;
    for (char ch : board) {
        if (ch == '/') {
            if (col != 8) throw ParseError(0, "short rank in FEN");
            ++row;
            col = 0;
            continue;
        }
        if (ch >= '1' && ch <= '8') {
            col += ch - '0';
            if (col > 8) throw ParseError(0, "rank overflow in FEN");
            continue;
        }
        int type;
        switch (std::tolower(static_cast<unsigned char>(ch))) {
            case 'p': type = kPawn; break;
            case 'n': type = kKnight; break;
            case 'b': type = kBishop; break;
            case 'r': type = kRook; break;
            case 'q': type = kQueen; break;
            case 'k': type = kKing; break;
            default: throw ParseError(0, std::string("bad FEN piece '") + ch + "'");
        }
        if (row > 7 || col > 7) throw ParseError(0, "FEN board overflow");
        p.board[detail::square(row, col++)] =
            static_cast<std::int8_t>(std::isupper(static_cast<unsigned char>(ch)) ? type : -type);
    }
    if (row != 7 || col != 8) throw ParseError(0, "FEN board is incomplete");

    if (side == "w") p.side = Side::White;
    else if (side == "b") p.side = Side::Black;
    else throw ParseError(0, "bad FEN side field");

    if (castling != "-") {
        for (char ch : castling) {
            switch (ch) {
                case 'K': p.castling |= kWhiteKingside; break;
                case 'Q': p.castling |= kWhiteQueenside; break;
                case 'k': p.castling |= kBlackKingside; break;
                case 'q': p.castling |= kBlackQueenside; break;
                default: throw ParseError(0, "bad FEN castling field");
            }
        }
    }
    if (ep != "-") {
        if (ep.size() != 2 || ep[0] < 'a' || ep[0] > 'h' || ep[1] < '1' || ep[1] > '8')
            throw ParseError(0, "bad FEN en passant field");
        p.ep_square = detail::square('8' - ep[1], ep[0] - 'a');
    }
    return p;
}

inline std::string fen_from_position(const Position& p) {
    std::string out;
    for (int row = 0; row < 8; ++row) {
        int run = 0;
        for (int col = 0; col < 8; ++col) {
            const int piece = p.board[detail::square(row, col)];
            if (piece == 0) {
                ++run;
                continue;
            }
            if (run > 0) {
                out += static_cast<char>('0' + run);
                run = 0;
            }
            static constexpr const char* names = " pnbrqk";
            const char ch = names[piece > 0 ? piece : -piece];
            out += piece > 0 ? static_cast<char>(std::toupper(ch)) : ch;
        }
        if (run > 0) out += static_cast<char>('0' + run);
        if (row != 7) out += '/';
    }
    out += p.side == Side::White ? " w " : " b ";
    if (p.castling == 0) {
        out += '-';
    } else {
        if (p.castling & kWhiteKingside) out += 'K';
        if (p.castling & kWhiteQueenside) out += 'Q';
        if (p.castling & kBlackKingside) out += 'k';
        if (p.castling & kBlackQueenside) out += 'q';
    }
    out += ' ';
    if (p.ep_square < 0) {
        out += '-';
    } else {
        out += static_cast<char>('a' + detail::col_of(p.ep_square));
        out += static_cast<char>('8' - detail::row_of(p.ep_square));
    }
    return out;
}

inline Position initial_position() {
    return position_from_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1");
}

// ---- grid encoding ----
// 0 empty, 1..6 white pawn..king, 7..12 black pawn..king. Castling rights
// and en passant state are not expressible in the grid; decoded positions
// get neither.

inline Grid grid_from_position(const Position& p) {
    Grid g(8, 8);
    for (int sq = 0; sq < 64; ++sq) {
        const int piece = p.board[sq];
        if (piece > 0) g.set(sq / 8, sq % 8, piece);
        else if (piece < 0) g.set(sq / 8, sq % 8, 6 - piece);
    }
    return g;
}

inline Position position_from_grid(const Grid& g, Side side = Side::White) {
    if (g.rows() != 8 || g.cols() != 8) throw IllegalPosition("chess grids are 8x8");
    Position p;
    p.side = side;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            const int v = g.at(r, c);
            if (v == 0) continue;
            if (v > 12) throw ValueOutOfRange(v);
            p.board[detail::square(r, c)] =
                static_cast<std::int8_t>(v <= 6 ? v : -(v - 6));
        }
    }
    return p;
}

/// A verified mate-in-1 puzzle: the input board with white to move and the
/// move that mates.
struct ChessInstance {
    Grid board;
    Move mate_move;
};

/// Build an instance from a FEN when the position is legal, white moves,
/// and at least one mating move exists; the first one in generation order
/// is recorded.
inline std::optional<ChessInstance> instance_from_fen(const std::string& fen) {
    const Position p = position_from_fen(fen);
    check_position_legal(p, /*require_white_to_move=*/true);
    const auto mates = find_mate_moves(p);
    if (mates.empty()) return std::nullopt;
    return ChessInstance{grid_from_position(p), mates.front()};
}

/// (input, output) grids: the position before and after the mating move.
inline std::pair<Grid, Grid> encode_chess_pair(const ChessInstance& inst) {
    const Position before = position_from_grid(inst.board);
    const Position after = apply_move(before, inst.mate_move);
    return {inst.board, grid_from_position(after)};
}

}  // namespace gridbench::chess
