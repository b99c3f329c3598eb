#include "moiredb/png_io.hpp"

#include <png.h>

#include <cstring>
#include <fstream>
#include <string>

#include "moiredb/error.hpp"

namespace moiredb {

namespace {

struct PngWriteContext {
    png_structp png = nullptr;
    png_infop info = nullptr;

    PngWriteContext() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png == nullptr) {
            throw Error("png: cannot allocate write struct");
        }
        info = png_create_info_struct(png);
        if (info == nullptr) {
            png_destroy_write_struct(&png, nullptr);
            throw Error("png: cannot allocate info struct");
        }
    }
    ~PngWriteContext() { png_destroy_write_struct(&png, &info); }

    PngWriteContext(const PngWriteContext&) = delete;
    PngWriteContext& operator=(const PngWriteContext&) = delete;
};

void append_bytes(png_structp png, png_bytep data, png_size_t length) {
    auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + length);
}

void flush_nothing(png_structp) {}

std::vector<std::uint8_t> encode(std::size_t width, std::size_t height, int color_type,
                                 std::size_t channels, std::span<const std::uint8_t> pixels) {
    std::vector<std::uint8_t> out;
    std::vector<png_bytep> rows(height);
    for (std::size_t y = 0; y < height; ++y) {
        rows[y] = const_cast<png_bytep>(pixels.data() + y * width * channels);
    }

    PngWriteContext ctx;
    if (setjmp(png_jmpbuf(ctx.png))) {
        throw Error("png: encoding failed");
    }
    png_set_write_fn(ctx.png, &out, append_bytes, flush_nothing);
    png_set_compression_level(ctx.png, kPngCompressionLevel);
    png_set_filter(ctx.png, PNG_FILTER_TYPE_BASE, PNG_FILTER_UP);
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_rows(ctx.png, ctx.info, rows.data());
    png_write_png(ctx.png, ctx.info, PNG_TRANSFORM_IDENTITY, nullptr);
    return out;
}

template <std::size_t Channels>
BasicImage<Channels> decode(std::span<const std::uint8_t> bytes) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        const std::string message = image.message;
        png_image_free(&image);
        throw FormatError("png: " + message);
    }
    const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
    const bool alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
    if (alpha || color != (Channels == 3)) {
        png_image_free(&image);
        throw FormatError(Channels == 3 ? "png: expected an 8-bit RGB image"
                                        : "png: expected an 8-bit grayscale image");
    }
    image.format = Channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
    std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
        const std::string message = image.message;
        png_image_free(&image);
        throw FormatError("png: " + message);
    }
    return BasicImage<Channels>(image.width, image.height, std::move(pixels));
}

template <typename Decoded>
Decoded read_with_path(const std::filesystem::path& path, Decoded (*decoder)(std::span<const std::uint8_t>)) {
    const auto bytes = read_file(path);
    try {
        return decoder(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

}  // namespace

std::vector<std::uint8_t> encode_png(const GrayImage& image) {
    return encode(image.width(), image.height(), PNG_COLOR_TYPE_GRAY, 1, image.pixels());
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
    return encode(image.width(), image.height(), PNG_COLOR_TYPE_RGB, 3, image.pixels());
}

GrayImage decode_png_gray(std::span<const std::uint8_t> bytes) { return decode<1>(bytes); }
RgbImage decode_png_rgb(std::span<const std::uint8_t> bytes) { return decode<3>(bytes); }

void write_png(const std::filesystem::path& path, const GrayImage& image) {
    write_file(path, encode_png(image));
}

void write_png(const std::filesystem::path& path, const RgbImage& image) {
    write_file(path, encode_png(image));
}

GrayImage read_png_gray(const std::filesystem::path& path) {
    return read_with_path<GrayImage>(path, &decode_png_gray);
}

RgbImage read_png_rgb(const std::filesystem::path& path) {
    return read_with_path<RgbImage>(path, &decode_png_rgb);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path, "cannot open for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError(path, "read failed");
    }
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError(path, "cannot open for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) {
        throw IoError(path, "write failed");
    }
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace moiredb
