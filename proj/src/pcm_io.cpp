#include "covercode/pcm_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "covercode/util.hpp"

namespace covercode::io {

std::string pcm_to_string(const codes::ParityCheck& H) {
    H.validate();
    std::ostringstream os;
    os << "%covercode-pcm v1\n";
    os << H.field->header() << " rows " << H.r << " cols " << H.n << "\n";
    for (std::uint32_t i = 0; i < H.r; ++i) {
        for (std::uint32_t j = 0; j < H.n; ++j) {
            if (j) os << ' ';
            os << H.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

codes::ParityCheck pcm_from_string(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "%covercode-pcm v1")
        throw std::invalid_argument("pcm: bad or missing header line");
    std::string qtok, pe, rows_tok, cols_tok;
    std::uint32_t r = 0, n = 0;
    {
        if (!std::getline(is, line)) throw std::invalid_argument("pcm: missing field line");
        std::istringstream ls(line);
        if (!(ls >> qtok >> pe >> rows_tok >> r >> cols_tok >> n) || qtok != "q" ||
            rows_tok != "rows" || cols_tok != "cols")
            throw std::invalid_argument("pcm: malformed field line");
    }
    const auto caret = pe.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("pcm: field must be written p^e");
    const std::uint32_t p = std::stoul(pe.substr(0, caret));
    const std::uint32_t e = std::stoul(pe.substr(caret + 1));

    codes::ParityCheck H;
    H.field = gf::field_create(p, e);
    H.r = r;
    H.n = n;
    H.cols.assign(std::size_t(r) * n, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        if (!std::getline(is, line)) throw std::invalid_argument("pcm: missing matrix row");
        std::istringstream ls(line);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t v;
            if (!(ls >> v)) throw std::invalid_argument("pcm: short matrix row");
            if (v >= H.field->order()) throw std::invalid_argument("pcm: element out of range");
            H.at(i, j) = v;
        }
    }
    H.validate();
    return H;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

void write_pcm(const std::string& path, const codes::ParityCheck& H) {
    write_file(path, pcm_to_string(H));
}

codes::ParityCheck read_pcm(const std::string& path) { return pcm_from_string(read_file(path)); }

std::string Manifest::serialize() const {
    std::ostringstream os;
    os << "%covercode-manifest v1\n";
    os << "tool: covercode 1.0.0\n";
    os << "command: " << command << "\n";
    if (has_seed) os << "seed: " << seed << "\n";
    for (const auto& [k, v] : params) os << "param." << k << ": " << v << "\n";
    for (const auto& [path, digest] : inputs) os << "input: file=" << path << " digest=fnv1a64:" << digest << "\n";
    for (const auto& [path, digest] : outputs) os << "output: file=" << path << " digest=fnv1a64:" << digest << "\n";
    os << "wall_seconds: " << wall_seconds << "\n";
    return os.str();
}

}  // namespace covercode::io
