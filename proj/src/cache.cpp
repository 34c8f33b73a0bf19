#include "wpgap/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "wpgap/error.hpp"

namespace wpgap {

namespace {

std::string header(int genus, std::string_view filter, std::size_t count) {
  return "wpgap-cache v" + std::to_string(kCacheFormatVersion) + " genus=" +
         std::to_string(genus) + " filter=" + std::string(filter) +
         " count=" + std::to_string(count);
}

}  // namespace

std::string serialize_cache(int genus, std::string_view filter, const std::vector<GapList>& lists) {
  std::string out = header(genus, filter, lists.size());
  out += '\n';
  for (const GapList& gaps : lists) {
    out += format_gaps(gaps);
    out += '\n';
  }
  return out;
}

std::optional<std::vector<GapList>> parse_cache(std::string_view text, int genus,
                                                std::string_view filter) {
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) return std::nullopt;
  const std::string_view head = text.substr(0, eol);

  // Header prefix is fixed; count is read from the tail.
  const std::string expected_prefix = "wpgap-cache v" + std::to_string(kCacheFormatVersion) +
                                      " genus=" + std::to_string(genus) +
                                      " filter=" + std::string(filter) + " count=";
  if (!head.starts_with(expected_prefix)) return std::nullopt;
  std::size_t count = 0;
  try {
    const std::string count_text(head.substr(expected_prefix.size()));
    std::size_t used = 0;
    count = std::stoull(count_text, &used);
    if (used != count_text.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }

  std::vector<GapList> lists;
  std::string_view body = text.substr(eol + 1);
  while (!body.empty()) {
    const std::size_t end = body.find('\n');
    if (end == std::string_view::npos) return std::nullopt;  // missing trailing newline
    try {
      GapList gaps = parse_gaps(body.substr(0, end));
      if (static_cast<int>(gaps.size()) != genus) return std::nullopt;
      lists.push_back(std::move(gaps));
    } catch (const Error&) {
      return std::nullopt;
    }
    body.remove_prefix(end + 1);
  }
  if (lists.size() != count) return std::nullopt;
  return lists;
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int genus,
                                      std::string_view filter) {
  std::string name = "wpgap-v" + std::to_string(kCacheFormatVersion) + "-g" +
                     std::to_string(genus) + "-";
  for (char c : filter) {
    switch (c) {
      case '=': break;
      case ';': name += '_'; break;
      case ':': name += '-'; break;
      case '*': name += 'x'; break;
      default: name += c;
    }
  }
  return dir / (name + ".txt");
}

std::optional<std::vector<GapList>> load_cache(const std::filesystem::path& dir, int genus,
                                               std::string_view filter) {
  std::ifstream in(cache_file_path(dir, genus, filter), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cache(buffer.str(), genus, filter);
}

void store_cache(const std::filesystem::path& dir, int genus, std::string_view filter,
                 const std::vector<GapList>& lists) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path target = cache_file_path(dir, genus, filter);

  static std::atomic<unsigned> sequence{0};
  std::filesystem::path temp = target;
  temp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
          "." + std::to_string(sequence++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write cache file " + temp.string());
    out << serialize_cache(genus, filter, lists);
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "short write to " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

}  // namespace wpgap
