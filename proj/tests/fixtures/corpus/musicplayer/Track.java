package musicplayer;

public final class AudioTrack {
    private final String title;
    private final String artistName;
    private final int durationSeconds;
    private final int sampleRate;

    public AudioTrack(String title, String artistName, int durationSeconds, int sampleRate) {
        this.title = title;
        this.artistName = artistName;
        this.durationSeconds = durationSeconds;
        this.sampleRate = sampleRate;
    }

    public String getTitle() {
        return title;
    }

    public String getArtistName() {
        return artistName;
    }

    public int getDurationSeconds() {
        return durationSeconds;
    }

    public double playbackMinutes() {
        return durationSeconds / 60.0;
    }

    public int getSampleRate() {
        return sampleRate;
    }
}
