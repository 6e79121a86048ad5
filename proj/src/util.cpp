#include "util.hpp"

#include <fstream>
#include <sstream>

#include "atc/errors.hpp"
#include "atc/unicode.hpp"

namespace atc::detail {

std::string read_file_bytes(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec))
        throw IoError("not a readable file: '" + path.string() + "'");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return std::move(ss).str();
}

std::string decode_utf8_text(std::string bytes, const std::string& where) {
    if (auto bad = uni::find_invalid_utf8(bytes)) throw EncodingError(where, *bad);
    if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
        static_cast<unsigned char>(bytes[1]) == 0xBB &&
        static_cast<unsigned char>(bytes[2]) == 0xBF)
        bytes.erase(0, 3);
    return bytes;
}

}  // namespace atc::detail
